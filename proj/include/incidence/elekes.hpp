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

#include <algorithm>
#include <cstdint>
#include <string>

#include "incidence/checked.hpp"
#include "incidence/core.hpp"
#include "incidence/proportionality.hpp"

namespace incidence {

// Grid {0..k-1} x {0..km-1} with every non-vertical line that meets it in
// k points. Such a line hits every column, so it is y = a*x + b with integer
// a and b, 0 <= b <= km-1 and 0 <= a(k-1) + b <= km-1.
class ElekesParams {
 public:
  ElekesParams(std::int64_t k, std::int64_t m) : k_(k), m_(m) {
    if (k < 2) throw ValidationError("k must be >= 2 (got " + std::to_string(k) + ")");
    if (m < 1) throw ValidationError("m must be >= 1 (got " + std::to_string(m) + ")");
    height_ = checked::mul(k, m);
    checked::mul(height_, k);  // n
    // l <= km(2m + 1), so I = l*k is bounded by this product.
    checked::mul(checked::mul(height_, checked::add(checked::mul(2, m), 1)), k);
  }

  std::int64_t k() const noexcept { return k_; }
  std::int64_t m() const noexcept { return m_; }
  // Number of rows, k*m.
  std::int64_t height() const noexcept { return height_; }

 private:
  std::int64_t k_;
  std::int64_t m_;
  std::int64_t height_;
};

namespace detail {

// Admissible slopes for intercept b: ceil(-b/(k-1)) .. floor((km-1-b)/(k-1)).
inline std::int64_t elekes_slope_min(const ElekesParams& p, std::int64_t b) {
  return checked::ceil_div(-b, p.k() - 1);
}

inline std::int64_t elekes_slope_max(const ElekesParams& p, std::int64_t b) {
  return checked::floor_div(p.height() - 1 - b, p.k() - 1);
}

}  // namespace detail

inline std::int64_t exact_elekes_line_count(const ElekesParams& p) {
  std::int64_t total = 0;
  for (std::int64_t b = 0; b < p.height(); ++b) {
    const std::int64_t per_b =
        detail::elekes_slope_max(p, b) - detail::elekes_slope_min(p, b) + 1;
    total = checked::add(total, per_b);
  }
  return total;
}

// Lines are emitted in lexicographic (slope, intercept) order.
inline Configuration generate_elekes(const ElekesParams& p) {
  Configuration config;
  config.provenance = {Construction::kElekes, p.k(), p.m()};
  const std::int64_t n = checked::mul(p.k(), p.height());
  config.points.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < p.k(); ++x) {
    for (std::int64_t y = 0; y < p.height(); ++y) config.points.push_back({x, y});
  }

  const std::int64_t top = p.height() - 1;
  const std::int64_t slope_min = detail::elekes_slope_min(p, top);
  const std::int64_t slope_max = detail::elekes_slope_max(p, 0);
  config.lines.reserve(static_cast<std::size_t>(exact_elekes_line_count(p)));
  for (std::int64_t a = slope_min; a <= slope_max; ++a) {
    const std::int64_t rise = checked::mul(a, p.k() - 1);
    const std::int64_t b_lo = std::max<std::int64_t>(0, -rise);
    const std::int64_t b_hi = std::min(top, top - rise);
    for (std::int64_t b = b_lo; b <= b_hi; ++b) config.lines.push_back(line_from_slope(a, b));
  }
  return config;
}

inline IncidenceStats elekes_stats(const ElekesParams& p) {
  const std::int64_t n = checked::mul(p.k(), p.height());
  const std::int64_t l = exact_elekes_line_count(p);
  return make_stats(n, l, checked::mul(l, p.k()));
}

// The original construction: {1..k} x {1..2km} with lines y = a*x + b for
// a in {1..m}, b in {1..km}. Each line meets exactly k points.
class ClassicElekesParams {
 public:
  ClassicElekesParams(std::int64_t k, std::int64_t m) : k_(k), m_(m) {
    if (k < 1) throw ValidationError("k must be >= 1 (got " + std::to_string(k) + ")");
    if (m < 2) throw ValidationError("m must be >= 2 (got " + std::to_string(m) + ")");
    height_ = checked::mul(2, checked::mul(k, m));
    checked::mul(checked::mul(k, k), checked::mul(m, m));  // I = k^2 m^2
    checked::mul(height_, k);                               // n = 2k^2 m
  }

  std::int64_t k() const noexcept { return k_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t height() const noexcept { return height_; }

 private:
  std::int64_t k_;
  std::int64_t m_;
  std::int64_t height_;
};

inline Configuration generate_classic_elekes(const ClassicElekesParams& p) {
  Configuration config;
  config.provenance = {Construction::kClassicElekes, p.k(), p.m()};
  config.points.reserve(static_cast<std::size_t>(p.k() * p.height()));
  for (std::int64_t x = 1; x <= p.k(); ++x) {
    for (std::int64_t y = 1; y <= p.height(); ++y) config.points.push_back({x, y});
  }
  const std::int64_t intercepts = p.k() * p.m();
  config.lines.reserve(static_cast<std::size_t>(intercepts * p.m()));
  for (std::int64_t a = 1; a <= p.m(); ++a) {
    for (std::int64_t b = 1; b <= intercepts; ++b) config.lines.push_back(line_from_slope(a, b));
  }
  return config;
}

inline IncidenceStats classic_elekes_stats(const ClassicElekesParams& p) {
  const std::int64_t n = p.k() * p.height();
  const std::int64_t l = p.k() * p.m() * p.m();
  return make_stats(n, l, p.k() * p.k() * p.m() * p.m());
}

}  // namespace incidence
