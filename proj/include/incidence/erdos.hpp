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
#include <numbers>
#include <string>
#include <vector>

#include "incidence/checked.hpp"
#include "incidence/core.hpp"
#include "incidence/numtheory.hpp"
#include "incidence/proportionality.hpp"

namespace incidence {

// 3 / (2^(1/3) * pi^(2/3)), the limit of the Erdos configuration constant.
inline double erdos_limit_constant() {
  return 3.0 / (std::cbrt(2.0) * std::cbrt(std::numbers::pi * std::numbers::pi));
}

class ErdosParams {
 public:
  ErdosParams(std::int64_t k, std::int64_t m) : k_(k), m_(m) {
    if (k < 1) throw ValidationError("k must be >= 1 (got " + std::to_string(k) + ")");
    if (m < 1) throw ValidationError("m must be >= 1 (got " + std::to_string(m) + ")");
    checked::mul(k, k);                // n
    checked::mul(checked::mul(m, m), checked::mul(k, k));  // I < 2m^2 * k^2
    checked::mul(m, k);                // largest |c|
  }

  std::int64_t k() const noexcept { return k_; }
  std::int64_t m() const noexcept { return m_; }

 private:
  std::int64_t k_;
  std::int64_t m_;
};

// Canonical directions (a, b) with a >= 1, gcd(a, |b|) = 1 and a + |b| <= m,
// plus (0, 1). Lexicographic order.
inline std::vector<Direction> enumerate_directions(std::int64_t m) {
  if (m < 1) throw ValidationError("m must be >= 1 (got " + std::to_string(m) + ")");
  std::vector<Direction> directions;
  directions.push_back({0, 1});
  for (std::int64_t a = 1; a <= m; ++a) {
    const std::int64_t reach = m - a;
    for (std::int64_t b = -reach; b <= reach; ++b) {
      if (gcd(a, b) == 1) directions.push_back({a, b});
    }
  }
  return directions;
}

struct CRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
};

// Values of c for which a*x + b*y = c meets the solid square [0, k-1]^2.
// The extremes are attained at corners: 0 and (a+b)(k-1) when b >= 0,
// b(k-1) and a(k-1) when b < 0.
inline CRange square_c_range(const Direction& d, std::int64_t k) {
  const std::int64_t side = k - 1;
  if (d.b >= 0) return {0, checked::mul(checked::add(d.a, d.b), side)};
  return {checked::mul(d.b, side), checked::mul(d.a, side)};
}

// Lines are emitted direction-major, then by ascending c.
inline Configuration generate_erdos(const ErdosParams& p) {
  Configuration config;
  config.provenance = {Construction::kErdos, p.k(), p.m()};
  config.points.reserve(static_cast<std::size_t>(p.k() * p.k()));
  for (std::int64_t x = 0; x < p.k(); ++x) {
    for (std::int64_t y = 0; y < p.k(); ++y) config.points.push_back({x, y});
  }
  for (const Direction& d : enumerate_directions(p.m())) {
    const CRange range = square_c_range(d, p.k());
    for (std::int64_t c = range.lo; c <= range.hi; ++c) {
      config.lines.push_back(canonicalize_line(d, c));
    }
  }
  return config;
}

// Number of directions d(m) and the norm sum S(m) = sum of |a| + |b|.
struct DirectionTotals {
  std::int64_t count = 0;
  std::int64_t norm_sum = 0;
};

inline DirectionTotals direction_totals(std::int64_t m) {
  DirectionTotals totals;
  for (const Direction& d : enumerate_directions(m)) {
    ++totals.count;
    totals.norm_sum = checked::add(totals.norm_sum, d.norm());
  }
  return totals;
}

// n = k^2, l = S(m)(k-1) + d(m), I = k^2 d(m): every point lies on exactly
// one line of each direction, and that line meets the square.
inline IncidenceStats exact_erdos_counts(const ErdosParams& p) {
  const DirectionTotals totals = direction_totals(p.m());
  const std::int64_t n = checked::mul(p.k(), p.k());
  const std::int64_t l = checked::add(checked::mul(totals.norm_sum, p.k() - 1), totals.count);
  return make_stats(n, l, checked::mul(n, totals.count));
}

// 4m^3(k-1)/pi^2 + 6m^2/pi^2.
inline double asymptotic_erdos_line_count(const ErdosParams& p) {
  const double m = static_cast<double>(p.m());
  const double side = static_cast<double>(p.k() - 1);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return 4.0 * m * m * m * side / pi2 + 6.0 * m * m / pi2;
}

// d(m) / S(m)^(2/3): the configuration constant as k -> infinity with m fixed.
inline double limit_constant(std::int64_t m) {
  const DirectionTotals totals = direction_totals(m);
  const double root = std::cbrt(static_cast<double>(totals.norm_sum));
  return static_cast<double>(totals.count) / (root * root);
}

}  // namespace incidence
