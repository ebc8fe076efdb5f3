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

// Command implementations for the `incidence` tool. Kept in a header so the
// test suite can drive them with string streams.
//
//   incidence generate <construction> <k> <m> [--format text|json] [--out PATH]
//   incidence stats <construction> <k> <m> [--verify] [--format text|json|csv]
//   incidence sweep <construction> <k_spec> <m_spec> [--format csv|json] [--out PATH]
//   incidence oracle-verify <construction> <k_max> <m_max>
//
// Every command accepts --threads N (0 = one per hardware thread).
// Exit codes: 0 ok, 1 validation, 2 verification mismatch, 3 I/O, 4 overflow.

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "incidence/incidence.hpp"

namespace incidence::cli {

// Parses "5", "3..10", "100,1000", "1..3,7" (optionally prefixed with
// "<key>="). An empty spec is an empty list.
inline std::vector<std::int64_t> parse_range(std::string_view spec, std::string_view key = {}) {
  if (!key.empty() && spec.size() > key.size() && spec.substr(0, key.size()) == key &&
      spec[key.size()] == '=') {
    spec.remove_prefix(key.size() + 1);
  }
  std::vector<std::int64_t> values;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      values.push_back(parse_int(item));
      continue;
    }
    const std::int64_t lo = parse_int(item.substr(0, dots));
    const std::int64_t hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw ValidationError("empty range '" + std::string(item) + "'");
    if (hi - lo > 10'000'000) throw ValidationError("range too long: '" + std::string(item) + "'");
    for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
  }
  return values;
}

// k values crossed with m values, or m = k - 1 per k when m_spec is "diag".
inline std::vector<ParamPair> parse_sweep_params(std::string_view k_spec,
                                                 std::string_view m_spec) {
  const std::vector<std::int64_t> ks = parse_range(k_spec, "k");
  if (m_spec.substr(0, 2) == "m=") m_spec.remove_prefix(2);
  std::vector<ParamPair> params;
  if (m_spec == "diag") {
    for (std::int64_t k : ks) params.emplace_back(k, k - 1);
    return params;
  }
  const std::vector<std::int64_t> ms = parse_range(m_spec);
  for (std::int64_t k : ks) {
    for (std::int64_t m : ms) params.emplace_back(k, m);
  }
  return params;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

// Writes `content` to `path`, or to `fallback` when path is empty.
inline void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

inline void print_stats_text(std::ostream& os, Construction construction, std::int64_t k,
                             std::int64_t m, const IncidenceStats& stats) {
  os << "construction: " << construction_name(construction) << " k=" << k << " m=" << m << '\n'
     << "n: " << stats.n << '\n'
     << "l: " << stats.l << '\n'
     << "I: " << stats.incidences << '\n'
     << "constant: " << format_double_short(stats.constant)
     << (stats.reduced_precision() ? " (reduced precision)" : "") << '\n'
     << "regime_ok: " << (stats.regime_ok ? "true" : "false") << '\n';
}

}  // namespace detail

inline int cmd_generate(Streams io, Construction construction, std::int64_t k, std::int64_t m,
                        const std::string& format, const std::string& out_path) {
  if (format != "text" && format != "json") {
    throw ValidationError("generate supports --format text or json, not '" + format + "'");
  }
  const Configuration config = generate(construction, k, m);
  std::ostringstream body;
  if (format == "json") {
    write_config_json(body, config);
  } else {
    write_config_text(body, config);
  }
  detail::emit(out_path, body.str(), io.out);
  std::ostream& summary = out_path.empty() ? io.err : io.out;
  summary << "n=" << config.points.size() << " l=" << config.lines.size() << '\n';
  return 0;
}

inline int cmd_stats(Streams io, Construction construction, std::int64_t k, std::int64_t m,
                     bool verify, const std::string& format, unsigned threads) {
  if (format != "text" && format != "json" && format != "csv") {
    throw ValidationError("unknown --format '" + format + "'");
  }
  const IncidenceStats stats = exact_stats(construction, k, m);
  const SweepRow row = sweep_row(construction, k, m);

  std::optional<EngineCounts> engines;
  if (verify) {
    const Configuration config = generate(construction, k, m);
    engines = EngineCounts{stats.incidences, count_incidences_bucketed(config, threads),
                           count_incidences_bruteforce(config, threads)};
  }

  if (format == "json") {
    nlohmann::json j = sweep_row_to_json(row);
    if (engines) {
      j["verify"] = {{"formula", engines->formula},
                     {"bucketed", engines->bucketed},
                     {"bruteforce", engines->bruteforce},
                     {"ok", engines->agree()}};
    }
    io.out << j.dump() << '\n';
  } else if (format == "csv") {
    io.out << kSweepCsvHeader << '\n' << format_sweep_row_csv(row) << '\n';
  } else {
    detail::print_stats_text(io.out, construction, k, m, stats);
    if (engines) {
      io.out << "I (bucketed): " << engines->bucketed << '\n'
             << "I (bruteforce): " << engines->bruteforce << '\n'
             << "verify: " << (engines->agree() ? "ok" : "MISMATCH") << '\n';
    }
  }
  if (engines && !engines->agree()) {
    throw MismatchError("incidence engines disagree: formula=" +
                        std::to_string(engines->formula) +
                        " bucketed=" + std::to_string(engines->bucketed) +
                        " bruteforce=" + std::to_string(engines->bruteforce));
  }
  return 0;
}

inline int cmd_sweep(Streams io, Construction construction, const std::string& k_spec,
                     const std::string& m_spec, const std::string& format,
                     const std::string& out_path, unsigned threads) {
  if (format != "csv" && format != "json") {
    throw ValidationError("sweep supports --format csv or json, not '" + format + "'");
  }
  const std::vector<ParamPair> params = parse_sweep_params(k_spec, m_spec);
  const std::vector<SweepRow> rows = sweep(construction, params, threads);

  std::ostringstream body;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& row : rows) j.push_back(sweep_row_to_json(row));
    body << j.dump() << '\n';
  } else {
    write_sweep_csv(body, rows);
  }
  detail::emit(out_path, body.str(), io.out);

  const StCeilingReport report = check_st_ceiling(rows);
  io.err << "st-ceiling: " << report.rows_checked << " rows checked, "
         << report.violations.size() << " violations (ceiling "
         << format_double_short(report.ceiling) << ")\n";
  for (const SweepRow& row : report.violations) {
    io.err << "  violation: k=" << row.k << " m=" << row.m
           << " constant=" << format_double(row.constant) << '\n';
  }
  std::size_t failed = 0;
  for (const SweepRow& row : rows) failed += row.failed() ? 1 : 0;
  if (failed != 0) io.err << "sweep: " << failed << " rows failed (see error column)\n";
  return report.ok() ? 0 : static_cast<int>(ErrorKind::kMismatch);
}

inline int cmd_oracle_verify(Streams io, Construction construction, std::int64_t k_max,
                             std::int64_t m_max, unsigned threads) {
  std::int64_t k_min = 1;
  std::int64_t m_min = 1;
  if (construction == Construction::kElekes) k_min = 2;
  if (construction == Construction::kClassicElekes) m_min = 2;
  if (construction == Construction::kCustom) {
    throw ValidationError("oracle-verify needs a named construction");
  }
  if (k_max < k_min || m_max < m_min) {
    throw ValidationError("oracle-verify " + std::string(construction_name(construction)) +
                          " needs k_max >= " + std::to_string(k_min) +
                          " and m_max >= " + std::to_string(m_min));
  }

  io.out << "oracle-verify " << construction_name(construction) << " k=" << k_min << ".."
         << k_max << " m=" << m_min << ".." << m_max << '\n';
  io.out << "k\\m";
  for (std::int64_t m = m_min; m <= m_max; ++m) io.out << ' ' << (m % 10);
  io.out << '\n';

  std::vector<VerifyCase> failures;
  std::size_t cases = 0;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    io.out << (k < 10 ? "  " : (k < 100 ? " " : "")) << k;
    for (std::int64_t m = m_min; m <= m_max; ++m) {
      VerifyCase result = verify_case(construction, k, m, threads);
      ++cases;
      io.out << ' ' << (result.ok ? '.' : 'X');
      if (!result.ok) failures.push_back(std::move(result));
    }
    io.out << '\n';
  }
  for (const VerifyCase& f : failures) {
    for (const std::string& problem : f.problems) {
      io.err << "mismatch k=" << f.k << " m=" << f.m << ": " << problem << '\n';
    }
  }
  io.out << (failures.empty() ? "PASS" : "FAIL") << ": " << (cases - failures.size()) << '/'
         << cases << " cases\n";
  return failures.empty() ? 0 : static_cast<int>(ErrorKind::kMismatch);
}

// Parses argv and dispatches. Never throws; returns the process exit code.
inline int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Point-line incidence constructions and counters", "incidence"};
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads (0 = auto)")->default_val(1);

  std::string construction_arg;
  std::string k_arg;
  std::string m_arg;
  std::string gen_format;
  std::string stats_format;
  std::string sweep_format;
  std::string out_path;
  bool verify = false;

  auto add_common = [&](CLI::App* sub, const char* k_help, const char* m_help) {
    sub->add_option("construction", construction_arg, "elekes, classic-elekes or erdos")
        ->required();
    sub->add_option("k", k_arg, k_help)->required();
    sub->add_option("m", m_arg, m_help)->required();
    sub->add_option("--threads", threads, "Worker threads (0 = auto)");
  };

  CLI::App* gen = app.add_subcommand("generate", "Write a configuration file");
  add_common(gen, "k parameter", "m parameter");
  gen->add_option("--format", gen_format, "text or json")->default_val("text");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* stats = app.add_subcommand("stats", "Print n, l, I and the constant");
  add_common(stats, "k parameter", "m parameter");
  stats->add_option("--format", stats_format, "text, json or csv")->default_val("text");
  stats->add_flag("--verify", verify, "Recount I with both engines");

  CLI::App* sw = app.add_subcommand("sweep", "Tabulate exact statistics over a grid");
  add_common(sw, "k values, e.g. 3..10 or 100,1000", "m values, or 'diag' for m = k-1");
  sw->add_option("--format", sweep_format, "csv or json")->default_val("csv");
  sw->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* oracle = app.add_subcommand("oracle-verify", "Check generators against oracles");
  add_common(oracle, "largest k", "largest m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kValidation);
  }

  try {
    const Construction construction = parse_construction(construction_arg);
    if (construction == Construction::kCustom) {
      throw ValidationError("construction must be elekes, classic-elekes or erdos");
    }
    if (*gen) {
      return cmd_generate(io, construction, parse_int(k_arg), parse_int(m_arg), gen_format,
                          out_path);
    }
    if (*stats) {
      return cmd_stats(io, construction, parse_int(k_arg), parse_int(m_arg), verify, stats_format,
                       threads);
    }
    if (*sw) return cmd_sweep(io, construction, k_arg, m_arg, sweep_format, out_path, threads);
    if (*oracle) {
      return cmd_oracle_verify(io, construction, parse_int(k_arg), parse_int(m_arg), threads);
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    io.err << "error: out of memory\n";
    return static_cast<int>(ErrorKind::kValidation);
  }
  return static_cast<int>(ErrorKind::kValidation);
}

}  // namespace incidence::cli
