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

// Cross-checks between the closed forms, the generators, and the two
// counting engines.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "incidence/analysis.hpp"
#include "incidence/counting.hpp"

namespace incidence {

struct EngineCounts {
  std::int64_t formula = 0;
  std::int64_t bucketed = 0;
  std::int64_t bruteforce = 0;

  bool agree() const { return formula == bucketed && bucketed == bruteforce; }
};

inline EngineCounts count_all_engines(Construction construction, std::int64_t k, std::int64_t m,
                                      unsigned threads = 1) {
  EngineCounts counts;
  counts.formula = exact_stats(construction, k, m).incidences;
  const Configuration config = generate(construction, k, m);
  counts.bucketed = count_incidences_bucketed(config, threads);
  counts.bruteforce = count_incidences_bruteforce(config, threads);
  return counts;
}

// Non-vertical lines through exactly k points of the grid, found by the
// all-pairs oracle.
inline std::vector<CanonicalLine> oracle_elekes_lines(const Configuration& config, std::int64_t k,
                                                      unsigned threads = 1) {
  std::vector<CanonicalLine> lines;
  for (const LineIncidenceProfile& profile :
       all_lines_through_pairs(config.points, kOracleCap, threads)) {
    if (profile.count == k && !profile.line.vertical()) lines.push_back(profile.line);
  }
  return lines;
}

struct VerifyCase {
  std::int64_t k = 0;
  std::int64_t m = 0;
  bool ok = true;
  std::vector<std::string> problems;
};

// Elekes: generator lines == oracle lines, and formula I == both engines.
// Other constructions: formula I and l against the generated configuration.
inline VerifyCase verify_case(Construction construction, std::int64_t k, std::int64_t m,
                              unsigned threads = 1) {
  VerifyCase result;
  result.k = k;
  result.m = m;
  auto fail = [&](const std::string& what) {
    result.ok = false;
    result.problems.push_back(what);
  };
  const IncidenceStats stats = exact_stats(construction, k, m);
  const Configuration config = generate(construction, k, m);

  if (static_cast<std::int64_t>(config.points.size()) != stats.n) fail("n differs from formula");
  if (static_cast<std::int64_t>(config.lines.size()) != stats.l) fail("l differs from formula");

  const std::int64_t bucketed = count_incidences_bucketed(config, threads);
  const std::int64_t brute = count_incidences_bruteforce(config, threads);
  if (bucketed != stats.incidences || brute != stats.incidences) {
    std::ostringstream os;
    os << "I mismatch: formula=" << stats.incidences << " bucketed=" << bucketed
       << " bruteforce=" << brute;
    fail(os.str());
  }

  if (construction == Construction::kElekes) {
    std::vector<CanonicalLine> generated = config.lines;
    std::sort(generated.begin(), generated.end());
    const std::vector<CanonicalLine> oracle = oracle_elekes_lines(config, k, threads);
    std::vector<CanonicalLine> missing;
    std::vector<CanonicalLine> extra;
    std::set_difference(oracle.begin(), oracle.end(), generated.begin(), generated.end(),
                        std::back_inserter(missing));
    std::set_difference(generated.begin(), generated.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(extra));
    for (const CanonicalLine& line : missing) {
      std::ostringstream os;
      os << "line " << line << " found by oracle but not generated";
      fail(os.str());
    }
    for (const CanonicalLine& line : extra) {
      std::ostringstream os;
      os << "line " << line << " generated but not an exactly-k-point line";
      fail(os.str());
    }
  }
  return result;
}

}  // namespace incidence
