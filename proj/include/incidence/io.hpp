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

// Serialization of configurations and sweep rows. All numbers are written
// with std::to_chars, so output never depends on the global locale.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "incidence/analysis.hpp"
#include "incidence/core.hpp"

namespace incidence {

// Shortest representation that parses back to the same double.
inline std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

// Six significant digits, for tables meant for people.
inline std::string format_double_short(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
  return std::string(buf, end);
}

inline std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("integer out of int64 range: '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

inline double parse_double(std::string_view text) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

// ---------------------------------------------------------------------------
// Configuration, text format
//
//   incidence-config v1 <construction> k=<k> m=<m>
//   p <x> <y>          one per point
//   l <a> <b> <c>      one per canonical line

inline void write_config_text(std::ostream& os, const Configuration& config) {
  std::string out;
  out += "incidence-config v1 ";
  out += construction_name(config.provenance.construction);
  out += " k=" + std::to_string(config.provenance.k);
  out += " m=" + std::to_string(config.provenance.m);
  out += '\n';
  for (const LatticePoint& p : config.points) {
    out += "p " + std::to_string(p.x) + ' ' + std::to_string(p.y) + '\n';
  }
  for (const CanonicalLine& line : config.lines) {
    out += "l " + std::to_string(line.a()) + ' ' + std::to_string(line.b()) + ' ' +
           std::to_string(line.c()) + '\n';
  }
  os << out;
}

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos == line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

inline std::int64_t parse_keyed(std::string_view field, std::string_view key) {
  if (field.substr(0, key.size()) != key) {
    throw ValidationError("expected '" + std::string(key) + "<int>', got '" +
                          std::string(field) + "'");
  }
  return parse_int(field.substr(key.size()));
}

// Rejects (a, b, c) triples that are not already in canonical form.
inline CanonicalLine strict_line(std::int64_t a, std::int64_t b, std::int64_t c) {
  const CanonicalLine line = canonicalize_line(a, b, c);
  if (line.a() != a || line.b() != b || line.c() != c) {
    throw ValidationError("line (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ") is not in canonical form");
  }
  return line;
}

}  // namespace detail

inline Configuration read_config_text(std::istream& is) {
  Configuration config;
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("empty configuration file");
  const auto header = detail::split_spaces(line);
  if (header.size() != 5 || header[0] != "incidence-config" || header[1] != "v1") {
    throw ValidationError("bad configuration header: '" + line + "'");
  }
  config.provenance.construction = parse_construction(header[2]);
  config.provenance.k = detail::parse_keyed(header[3], "k=");
  config.provenance.m = detail::parse_keyed(header[4], "m=");

  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const auto fields = detail::split_spaces(line);
    if (fields.empty()) continue;
    if (fields[0] == "p" && fields.size() == 3) {
      config.points.push_back({parse_int(fields[1]), parse_int(fields[2])});
    } else if (fields[0] == "l" && fields.size() == 4) {
      config.lines.push_back(detail::strict_line(parse_int(fields[1]), parse_int(fields[2]),
                                                 parse_int(fields[3])));
    } else {
      throw ValidationError("configuration line " + std::to_string(line_no) +
                            " not understood: '" + line + "'");
    }
  }
  return config;
}

// ---------------------------------------------------------------------------
// Configuration, JSON format:
//   {"construction": "...", "k": k, "m": m,
//    "points": [[x, y], ...], "lines": [[a, b, c], ...]}

inline nlohmann::json config_to_json(const Configuration& config) {
  nlohmann::json points = nlohmann::json::array();
  for (const LatticePoint& p : config.points) points.push_back({p.x, p.y});
  nlohmann::json lines = nlohmann::json::array();
  for (const CanonicalLine& line : config.lines) lines.push_back({line.a(), line.b(), line.c()});
  return {
      {"construction", std::string(construction_name(config.provenance.construction))},
      {"k", config.provenance.k},
      {"m", config.provenance.m},
      {"points", std::move(points)},
      {"lines", std::move(lines)},
  };
}

inline void write_config_json(std::ostream& os, const Configuration& config) {
  os << config_to_json(config).dump() << '\n';
}

inline Configuration config_from_json(const nlohmann::json& doc) {
  try {
    Configuration config;
    if (doc.contains("construction")) {
      config.provenance.construction =
          parse_construction(doc.at("construction").get<std::string>());
    }
    config.provenance.k = doc.value("k", std::int64_t{0});
    config.provenance.m = doc.value("m", std::int64_t{0});
    for (const auto& p : doc.at("points")) {
      if (p.size() != 2) throw ValidationError("point must be [x, y]");
      config.points.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    }
    for (const auto& l : doc.at("lines")) {
      if (l.size() != 3) throw ValidationError("line must be [a, b, c]");
      config.lines.push_back(detail::strict_line(
          l.at(0).get<std::int64_t>(), l.at(1).get<std::int64_t>(), l.at(2).get<std::int64_t>()));
    }
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed configuration JSON: ") + e.what());
  }
}

inline Configuration read_config_json(std::istream& is) {
  try {
    return config_from_json(nlohmann::json::parse(is));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed configuration JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Sweep rows, CSV

inline constexpr std::string_view kSweepCsvHeader =
    "construction,k,m,n,l,I,constant,regime_ok,limit_constant,error";

namespace detail {

inline std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw ValidationError("unterminated quote in CSV row");
  return fields;
}

}  // namespace detail

inline std::string format_sweep_row_csv(const SweepRow& row) {
  std::string out;
  out += construction_name(row.construction);
  out += ',' + std::to_string(row.k);
  out += ',' + std::to_string(row.m);
  out += ',' + std::to_string(row.n);
  out += ',' + std::to_string(row.l);
  out += ',' + std::to_string(row.incidences);
  out += ',' + format_double(row.constant);
  out += row.regime_ok ? ",true" : ",false";
  out += ',';
  if (row.limit_constant) out += format_double(*row.limit_constant);
  out += ',' + detail::csv_quote(row.error);
  return out;
}

inline SweepRow parse_sweep_row_csv(std::string_view line) {
  const auto f = detail::csv_split(line);
  if (f.size() != 10) {
    throw ValidationError("sweep CSV row must have 10 fields, got " + std::to_string(f.size()));
  }
  SweepRow row;
  row.construction = parse_construction(f[0]);
  row.k = parse_int(f[1]);
  row.m = parse_int(f[2]);
  row.n = parse_int(f[3]);
  row.l = parse_int(f[4]);
  row.incidences = parse_int(f[5]);
  row.constant = parse_double(f[6]);
  if (f[7] != "true" && f[7] != "false") throw ValidationError("regime_ok must be true/false");
  row.regime_ok = f[7] == "true";
  if (!f[8].empty()) row.limit_constant = parse_double(f[8]);
  row.error = f[9];
  return row;
}

inline void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRow& row : rows) out += format_sweep_row_csv(row) + '\n';
  os << out;
}

inline std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw ValidationError("missing or unexpected sweep CSV header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (!line.empty()) rows.push_back(parse_sweep_row_csv(line));
  }
  return rows;
}

inline nlohmann::json sweep_row_to_json(const SweepRow& row) {
  nlohmann::json j = {
      {"construction", std::string(construction_name(row.construction))},
      {"k", row.k},
      {"m", row.m},
      {"n", row.n},
      {"l", row.l},
      {"I", row.incidences},
      {"constant", row.constant},
      {"regime_ok", row.regime_ok},
      {"limit_constant", nullptr},
  };
  if (row.limit_constant) j["limit_constant"] = *row.limit_constant;
  if (row.failed()) j["error"] = row.error;
  return j;
}

}  // namespace incidence
