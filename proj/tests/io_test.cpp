// Copyright 2026 The Incidence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "incidence/io.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "incidence/elekes.hpp"
#include "incidence/erdos.hpp"
#include "oracle.hpp"

namespace incidence {
namespace {

TEST(ConfigText, ExactBytesForSmallElekes) {
  std::ostringstream os;
  write_config_text(os, generate_elekes(ElekesParams(2, 1)));
  EXPECT_EQ(os.str(),
            "incidence-config v1 elekes k=2 m=1\n"
            "p 0 0\n"
            "p 0 1\n"
            "p 1 0\n"
            "p 1 1\n"
            "l 1 1 1\n"
            "l 0 1 0\n"
            "l 0 1 1\n"
            "l 1 -1 0\n");
}

TEST(ConfigText, RoundTrip) {
  for (const Configuration& config :
       {generate_elekes(ElekesParams(5, 4)), generate_erdos(ErdosParams(17, 3)),
        generate_classic_elekes(ClassicElekesParams(3, 2))}) {
    std::stringstream ss;
    write_config_text(ss, config);
    EXPECT_EQ(read_config_text(ss), config);
  }
}

TEST(ConfigText, RejectsMalformedInput) {
  const auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_config_text(is);
  };
  EXPECT_THROW(parse(""), ValidationError);
  EXPECT_THROW(parse("incidence-config v2 elekes k=2 m=1\n"), ValidationError);
  EXPECT_THROW(parse("incidence-config v1 elekes k=2\n"), ValidationError);
  EXPECT_THROW(parse("incidence-config v1 elekes k=2 m=1\np 1\n"), ValidationError);
  EXPECT_THROW(parse("incidence-config v1 elekes k=2 m=1\nl 2 2 2\n"), ValidationError);
  EXPECT_THROW(parse("incidence-config v1 elekes k=2 m=1\nq 1 2\n"), ValidationError);
  EXPECT_THROW(parse("incidence-config v1 elekes k=2 m=1\np 1 99999999999999999999\n"),
               OverflowError);
  EXPECT_NO_THROW(parse("incidence-config v1 custom k=0 m=0\np 1 2\nl 1 0 1\n"));
}

TEST(ConfigJson, RoundTripAndShape) {
  const Configuration config = generate_erdos(ErdosParams(3, 2));
  std::stringstream ss;
  write_config_json(ss, config);
  const auto doc = nlohmann::json::parse(ss.str());
  EXPECT_EQ(doc.at("points").size(), 9u);
  EXPECT_EQ(doc.at("points")[1], nlohmann::json::array({0, 1}));
  EXPECT_EQ(doc.at("lines")[0], nlohmann::json::array({0, 1, 0}));
  EXPECT_EQ(read_config_json(ss), config);
}

TEST(ConfigJson, RejectsMalformedInput) {
  const auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_config_json(is);
  };
  EXPECT_THROW(parse("{"), ValidationError);
  EXPECT_THROW(parse(R"({"points": [[1]], "lines": []})"), ValidationError);
  EXPECT_THROW(parse(R"({"points": [], "lines": [[0, 0, 1]]})"), ValidationError);
  EXPECT_THROW(parse(R"({"points": [["a", 1]], "lines": []})"), ValidationError);
  EXPECT_EQ(parse(R"({"points": [[1, 2]], "lines": [[1, 0, 1]]})").points.size(), 1u);
}

TEST(FormatDouble, LocaleFreeAndRoundTrips) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double_short(1.0772173450159421), "1.07722");
  EXPECT_EQ(format_double_short(0.6299605249474366), "0.629961");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng);
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
}

TEST(SweepCsv, RowsRoundTripLosslessly) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> ints(0, std::numeric_limits<std::int64_t>::max());
  std::uniform_real_distribution<double> reals(0.0, 4.0);
  std::vector<SweepRow> rows;
  for (int i = 0; i < 300; ++i) {
    SweepRow row;
    row.construction = static_cast<Construction>(i % 3);
    row.k = ints(rng) % 100000;
    row.m = ints(rng) % 1000;
    row.n = ints(rng);
    row.l = ints(rng);
    row.incidences = ints(rng);
    row.constant = reals(rng);
    row.regime_ok = (i % 2) == 0;
    if (row.construction == Construction::kErdos) row.limit_constant = reals(rng);
    if (i % 17 == 0) row.error = "bad, \"quoted\" value";
    rows.push_back(row);
  }
  // Real rows too, including failures.
  const std::vector<ParamPair> params{{5, 4}, {1, 1}, {12, 12}};
  for (const SweepRow& row : sweep(Construction::kElekes, params)) rows.push_back(row);

  std::stringstream ss;
  write_sweep_csv(ss, rows);
  EXPECT_EQ(read_sweep_csv(ss), rows);
}

TEST(SweepCsv, HeaderOnlyForEmptySweep) {
  std::ostringstream os;
  write_sweep_csv(os, std::vector<SweepRow>{});
  EXPECT_EQ(os.str(), std::string(kSweepCsvHeader) + "\n");
}

TEST(SweepCsv, RejectsMalformedRows) {
  EXPECT_THROW(parse_sweep_row_csv("elekes,1,2"), ValidationError);
  EXPECT_THROW(parse_sweep_row_csv("elekes,1,2,3,4,5,x,true,,"), ValidationError);
  EXPECT_THROW(parse_sweep_row_csv("elekes,1,2,3,4,5,1.0,maybe,,"), ValidationError);
  EXPECT_THROW(parse_sweep_row_csv("elekes,1,2,3,4,5,1.0,true,,\"open"), ValidationError);
}

}  // namespace
}  // namespace incidence
