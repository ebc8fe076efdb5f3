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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "incidence/core.hpp"
#include "incidence/elekes.hpp"
#include "incidence/erdos.hpp"
#include "incidence/parallel.hpp"
#include "incidence/proportionality.hpp"

namespace incidence {

struct SweepRow {
  Construction construction = Construction::kElekes;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t incidences = 0;
  double constant = 0.0;
  bool regime_ok = false;
  std::optional<double> limit_constant;  // Erdos rows only
  std::string error;                     // empty unless the row failed

  bool failed() const { return !error.empty(); }

  IncidenceStats stats() const { return {n, l, incidences, constant, regime_ok}; }

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

using ParamPair = std::pair<std::int64_t, std::int64_t>;

// Closed-form statistics for one construction instance.
inline IncidenceStats exact_stats(Construction construction, std::int64_t k, std::int64_t m) {
  switch (construction) {
    case Construction::kElekes:
      return elekes_stats(ElekesParams(k, m));
    case Construction::kClassicElekes:
      return classic_elekes_stats(ClassicElekesParams(k, m));
    case Construction::kErdos:
      return exact_erdos_counts(ErdosParams(k, m));
    case Construction::kCustom:
      break;
  }
  throw ValidationError("no closed form for custom configurations");
}

inline Configuration generate(Construction construction, std::int64_t k, std::int64_t m) {
  switch (construction) {
    case Construction::kElekes:
      return generate_elekes(ElekesParams(k, m));
    case Construction::kClassicElekes:
      return generate_classic_elekes(ClassicElekesParams(k, m));
    case Construction::kErdos:
      return generate_erdos(ErdosParams(k, m));
    case Construction::kCustom:
      break;
  }
  throw ValidationError("cannot generate a custom configuration");
}

inline SweepRow sweep_row(Construction construction, std::int64_t k, std::int64_t m) {
  SweepRow row;
  row.construction = construction;
  row.k = k;
  row.m = m;
  try {
    const IncidenceStats stats = exact_stats(construction, k, m);
    row.n = stats.n;
    row.l = stats.l;
    row.incidences = stats.incidences;
    row.constant = stats.constant;
    row.regime_ok = stats.regime_ok;
    if (construction == Construction::kErdos) row.limit_constant = limit_constant(m);
  } catch (const Error& e) {
    row = SweepRow{};
    row.construction = construction;
    row.k = k;
    row.m = m;
    row.error = e.what();
  }
  return row;
}

// One row per (k, m) pair, in input order, from exact formulas only. A row
// that fails validation carries its message and the sweep continues.
inline std::vector<SweepRow> sweep(Construction construction, std::span<const ParamPair> params,
                                   unsigned threads = 1) {
  std::vector<SweepRow> rows(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    rows[i] = sweep_row(construction, params[i].first, params[i].second);
  });
  return rows;
}

// Cartesian product, k-major.
inline std::vector<SweepRow> sweep(Construction construction,
                                   std::span<const std::int64_t> k_values,
                                   std::span<const std::int64_t> m_values, unsigned threads = 1) {
  std::vector<ParamPair> params;
  params.reserve(k_values.size() * m_values.size());
  for (std::int64_t k : k_values) {
    for (std::int64_t m : m_values) params.emplace_back(k, m);
  }
  return sweep(construction, params, threads);
}

struct StCeilingReport {
  double ceiling = kStCeiling;
  std::size_t rows_checked = 0;
  std::vector<SweepRow> violations;

  bool ok() const { return violations.empty(); }
};

// Rows inside the regime whose constant exceeds the upper bound.
inline StCeilingReport check_st_ceiling(std::span<const SweepRow> rows) {
  StCeilingReport report;
  for (const SweepRow& row : rows) {
    ++report.rows_checked;
    if (!row.failed() && row.regime_ok && row.constant > report.ceiling) {
      report.violations.push_back(row);
    }
  }
  return report;
}

}  // namespace incidence
