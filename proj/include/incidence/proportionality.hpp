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

#include <cmath>
#include <cstdint>

#include "incidence/checked.hpp"
#include "incidence/core.hpp"

namespace incidence {

// Upper bound on the Szemeredi-Trotter constant used by check_st_ceiling.
inline constexpr double kStCeiling = 2.5;

// I / (n*l)^(2/3), evaluated as one cube root of n*l followed by a square.
// n*l is formed exactly in 128 bits; above 2^53 the conversion to binary64
// rounds (see IncidenceStats::reduced_precision).
inline double proportionality_constant(std::int64_t n, std::int64_t l, std::int64_t incidences) {
  if (n < 1 || l < 1) throw ValidationError("proportionality_constant: n and l must be >= 1");
  if (incidences < 0) throw ValidationError("proportionality_constant: incidences must be >= 0");
  const auto product = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(l);
  const double root = std::cbrt(static_cast<double>(product));
  return static_cast<double>(incidences) / (root * root);
}

// sqrt(n) <= l <= n^2, decided with exact integer comparisons.
inline bool regime_ok(std::int64_t n, std::int64_t l) {
  if (n < 1 || l < 1) return false;
  const auto wide_n = static_cast<unsigned __int128>(n);
  const auto wide_l = static_cast<unsigned __int128>(l);
  return wide_l * wide_l >= wide_n && wide_l <= wide_n * wide_n;
}

inline IncidenceStats make_stats(std::int64_t n, std::int64_t l, std::int64_t incidences) {
  IncidenceStats stats;
  stats.n = n;
  stats.l = l;
  stats.incidences = incidences;
  stats.constant = (n > 0 && l > 0) ? proportionality_constant(n, l, incidences) : 0.0;
  stats.regime_ok = regime_ok(n, l);
  return stats;
}

// Exact test of I >= c*n^(2/3)*l^(2/3) for c = 1, i.e. I^3 >= n^2 * l^2.
// Returns false without deciding if the cubes do not fit in 128 bits; callers
// then fall back to the binary64 constant.
inline bool constant_at_least_one_exact(std::int64_t n, std::int64_t l, std::int64_t incidences,
                                        bool& decided) {
  using u128 = unsigned __int128;
  decided = false;
  if (n < 0 || l < 0 || incidences < 0) return false;
  const u128 i = static_cast<u128>(incidences);
  const u128 nl = static_cast<u128>(n) * static_cast<u128>(l);
  const u128 max = ~u128{0};
  if (i != 0 && i * i > max / i) return false;
  if (nl != 0 && nl > max / nl) return false;
  decided = true;
  return i * i * i >= nl * nl;
}

}  // namespace incidence
