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
#include <limits>
#include <numeric>
#include <vector>

#include "incidence/checked.hpp"
#include "incidence/parallel.hpp"

namespace incidence {

// Greatest common divisor with gcd(0, n) = |n|. Throws OverflowError only
// when the result is 2^63 (both arguments in {0, INT64_MIN}).
inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  auto magnitude = [](std::int64_t v) -> std::uint64_t {
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v)
                 : static_cast<std::uint64_t>(v);
  };
  const std::uint64_t g = std::gcd(magnitude(a), magnitude(b));
  if (g > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw OverflowError("gcd result exceeds int64 range");
  }
  return static_cast<std::int64_t>(g);
}

inline constexpr std::int64_t kCoprimeDensityCap = 100000;

// Number of pairs (a, b) in [1, n]^2 with gcd(a, b) = 1.
inline std::uint64_t coprime_pair_count(std::int64_t n, unsigned threads = 1) {
  if (n < 1) throw ValidationError("coprime_pair_count: N must be >= 1");
  if (n > kCoprimeDensityCap) {
    throw ValidationError("coprime_pair_count: N exceeds cap of 100000");
  }
  // Count a < b and mirror; (1, 1) is the only coprime pair on the diagonal.
  const std::uint64_t below = parallel_sum(
      static_cast<std::size_t>(n), threads, [](std::size_t i) -> std::uint64_t {
        const auto b = static_cast<std::uint64_t>(i) + 1;
        std::uint64_t count = 0;
        for (std::uint64_t a = 1; a < b; ++a) {
          if (std::gcd(a, b) == 1) ++count;
        }
        return count;
      });
  return 2 * below + 1;
}

// Fraction of coprime pairs in [1, n]^2; exact count divided once at the end.
inline double coprime_density(std::int64_t n, unsigned threads = 1) {
  const std::uint64_t count = coprime_pair_count(n, threads);
  const auto total = static_cast<double>(n) * static_cast<double>(n);
  return static_cast<double>(count) / total;
}

// Entry j-1 holds the number of canonical directions (a, b) with
// |a| + |b| = j, for j in [1, m]. Canonical means a >= 1 and gcd(a, |b|) = 1,
// or (a, b) = (0, 1).
inline std::vector<std::int64_t> coprime_count_norm(std::int64_t m) {
  if (m < 1) throw ValidationError("coprime_count_norm: m must be >= 1");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  for (std::int64_t j = 1; j <= m; ++j) {
    std::int64_t count = (j == 1) ? 1 : 0;  // (0, 1)
    for (std::int64_t a = 1; a <= j; ++a) {
      const std::int64_t rest = j - a;
      if (gcd(a, rest) != 1) continue;
      count += (rest == 0) ? 1 : 2;  // b = +rest and b = -rest
    }
    counts[static_cast<std::size_t>(j - 1)] = count;
  }
  return counts;
}

}  // namespace incidence
