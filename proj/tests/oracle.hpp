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

// Test-only reference implementations. Nothing here calls into the library's
// generators or counters, so they can be used to check them. Only the plain
// data types (LatticePoint, Direction, tuples) are shared.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "incidence/core.hpp"

namespace incidence::oracle {

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

inline std::int64_t euclid(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Normalizes a line (a, b, c) by the gcd of all three coefficients and the
// sign of the first nonzero of (a, b). For lines through lattice points this
// agrees with the library's canonical form.
inline Triple normalize(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t g = euclid(euclid(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

inline Triple as_triple(const CanonicalLine& line) { return {line.a(), line.b(), line.c()}; }

inline bool on_line_wide(const LatticePoint& p, const Triple& t) {
  const auto [a, b, c] = t;
  return static_cast<__int128>(a) * p.x + static_cast<__int128>(b) * p.y == c;
}

inline std::vector<LatticePoint> grid(std::int64_t width, std::int64_t height,
                                      std::int64_t origin = 0) {
  std::vector<LatticePoint> points;
  for (std::int64_t x = origin; x < origin + width; ++x) {
    for (std::int64_t y = origin; y < origin + height; ++y) points.push_back({x, y});
  }
  return points;
}

struct LineCount {
  Triple line;
  std::int64_t count;
  auto operator<=>(const LineCount&) const = default;
};

// O(n^3): the line through every pair, then a full scan for its count.
inline std::vector<LineCount> lines_through_pairs_cubic(const std::vector<LatticePoint>& points) {
  std::set<Triple> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const auto& p = points[i];
      const auto& q = points[j];
      if (p == q) continue;
      const std::int64_t a = q.y - p.y;
      const std::int64_t b = p.x - q.x;
      lines.insert(normalize(a, b, a * p.x + b * p.y));
    }
  }
  std::vector<LineCount> out;
  for (const Triple& t : lines) {
    std::int64_t count = 0;
    for (const auto& p : points) count += on_line_wide(p, t) ? 1 : 0;
    out.push_back({t, count});
  }
  return out;
}

// Every (a, b) with a >= 0, |a| + |b| <= m, gcd 1, pencils deduplicated by
// mapping (0, -1) to (0, 1).
inline std::vector<Direction> directions_bruteforce(std::int64_t m) {
  std::set<Direction> dirs;
  for (std::int64_t a = 0; a <= m; ++a) {
    for (std::int64_t b = -m; b <= m; ++b) {
      if ((a == 0 && b == 0) || a + (b < 0 ? -b : b) > m) continue;
      if (euclid(a, b) != 1) continue;
      dirs.insert(a == 0 ? Direction{0, 1} : Direction{a, b});
    }
  }
  return {dirs.begin(), dirs.end()};
}

// Lines a*x + b*y = c in the given directions that meet the solid square
// [0, k-1]^2, found by scanning a generous c window and testing the four
// corners for a sign change.
inline std::set<Triple> erdos_lines_scan(std::int64_t k, std::int64_t m) {
  std::set<Triple> lines;
  const std::int64_t s = k - 1;
  const std::int64_t window = (m + 2) * (k + 2);
  for (const Direction& d : directions_bruteforce(m)) {
    for (std::int64_t c = -window; c <= window; ++c) {
      bool below = false;
      bool above = false;
      for (std::int64_t cx : {std::int64_t{0}, s}) {
        for (std::int64_t cy : {std::int64_t{0}, s}) {
          const std::int64_t v = d.a * cx + d.b * cy;
          below = below || v <= c;
          above = above || v >= c;
        }
      }
      if (below && above) lines.insert({d.a, d.b, c});
    }
  }
  return lines;
}

inline std::int64_t incidences_wide(const std::vector<LatticePoint>& points,
                                    const std::vector<Triple>& lines) {
  std::int64_t total = 0;
  for (const auto& p : points) {
    for (const auto& t : lines) total += on_line_wide(p, t) ? 1 : 0;
  }
  return total;
}

inline std::vector<Triple> triples(const std::vector<CanonicalLine>& lines) {
  std::vector<Triple> out;
  out.reserve(lines.size());
  for (const auto& line : lines) out.push_back(as_triple(line));
  return out;
}

// Random configuration: distinct points and canonical lines with
// coefficients in [-range, range].
inline Configuration random_configuration(std::mt19937_64& rng, std::size_t max_points,
                                          std::size_t max_lines, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::uniform_int_distribution<std::size_t> n_dist(0, max_points);
  std::uniform_int_distribution<std::size_t> l_dist(0, max_lines);
  std::uniform_int_distribution<std::int64_t> small(-6, 6);
  const std::size_t n = n_dist(rng);
  const std::size_t l = l_dist(rng);
  std::set<LatticePoint> points;
  while (points.size() < n) points.insert({coord(rng), coord(rng)});
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::set<CanonicalLine> lines;
  std::uniform_int_distribution<std::size_t> pick(0, pts.empty() ? 0 : pts.size() - 1);
  while (lines.size() < l) {
    std::int64_t a = small(rng);
    std::int64_t b = small(rng);
    if (a == 0 && b == 0) continue;
    const std::int64_t g = euclid(a, b);
    a /= g;
    b /= g;
    // Half of the lines pass through a chosen point so that hits are common.
    std::int64_t c = coord(rng);
    if (!pts.empty() && (rng() & 1)) {
      const auto& p = pts[pick(rng)];
      c = a * p.x + b * p.y;
    }
    lines.insert(canonicalize_line(a, b, c));
  }
  Configuration config;
  config.points = std::move(pts);
  config.lines.assign(lines.begin(), lines.end());
  std::shuffle(config.lines.begin(), config.lines.end(), rng);
  return config;
}

}  // namespace incidence::oracle
