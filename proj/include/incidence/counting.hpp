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
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incidence/checked.hpp"
#include "incidence/core.hpp"
#include "incidence/parallel.hpp"

namespace incidence {

struct LineIncidenceProfile {
  CanonicalLine line;
  std::int64_t count = 0;

  friend bool operator==(const LineIncidenceProfile&, const LineIncidenceProfile&) = default;
};

// Reference O(n*l) count of (point, line) pairs with the point on the line.
inline std::int64_t count_incidences_bruteforce(const Configuration& config,
                                                unsigned threads = 1) {
  const auto& lines = config.lines;
  const auto& points = config.points;
  const std::uint64_t total =
      parallel_sum(points.size(), threads, [&](std::size_t i) -> std::uint64_t {
        std::uint64_t hits = 0;
        for (const CanonicalLine& line : lines) {
          if (point_on_line(points[i], line)) ++hits;
        }
        return hits;
      });
  return static_cast<std::int64_t>(total);
}

namespace detail {

// Lines grouped into pencils. Each pencil keeps its c values sorted, paired
// with the index of the line in the configuration.
struct Pencil {
  Direction direction;
  std::vector<std::pair<std::int64_t, std::size_t>> offsets;
};

inline std::vector<Pencil> group_by_direction(std::span<const CanonicalLine> lines) {
  std::unordered_map<Direction, std::size_t> slot;
  std::vector<Pencil> pencils;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Direction d = direction_of(lines[i]);
    auto [it, inserted] = slot.try_emplace(d, pencils.size());
    if (inserted) pencils.push_back({d, {}});
    pencils[it->second].offsets.emplace_back(lines[i].c(), i);
  }
  for (Pencil& pencil : pencils) std::sort(pencil.offsets.begin(), pencil.offsets.end());
  return pencils;
}

// Range of entries in a pencil whose c equals value.
inline auto matching_offsets(const Pencil& pencil, std::int64_t value) {
  auto lo = std::lower_bound(pencil.offsets.begin(), pencil.offsets.end(),
                             std::pair<std::int64_t, std::size_t>{value, 0});
  auto hi = lo;
  while (hi != pencil.offsets.end() && hi->first == value) ++hi;
  return std::pair{lo, hi};
}

}  // namespace detail

// Per point and per pencil, computes c = a*x + b*y and looks it up among the
// pencil's lines. O(n*D log l + l log l) for D distinct directions. Duplicate
// lines are counted with multiplicity, as in the brute-force engine.
inline std::int64_t count_incidences_bucketed(const Configuration& config,
                                              unsigned threads = 1) {
  const std::vector<detail::Pencil> pencils = detail::group_by_direction(config.lines);
  const auto& points = config.points;
  const std::uint64_t total =
      parallel_sum(points.size(), threads, [&](std::size_t i) -> std::uint64_t {
        std::uint64_t hits = 0;
        for (const detail::Pencil& pencil : pencils) {
          const std::int64_t c =
              checked::dot(pencil.direction.a, points[i].x, pencil.direction.b, points[i].y);
          auto [lo, hi] = detail::matching_offsets(pencil, c);
          hits += static_cast<std::uint64_t>(hi - lo);
        }
        return hits;
      });
  return static_cast<std::int64_t>(total);
}

// Incidence count of every line, in configuration order.
inline std::vector<LineIncidenceProfile> line_profiles(const Configuration& config) {
  std::vector<LineIncidenceProfile> profiles(config.lines.size());
  for (std::size_t i = 0; i < config.lines.size(); ++i) profiles[i].line = config.lines[i];
  for (const detail::Pencil& pencil : detail::group_by_direction(config.lines)) {
    for (const LatticePoint& p : config.points) {
      const std::int64_t c = checked::dot(pencil.direction.a, p.x, pencil.direction.b, p.y);
      auto [lo, hi] = detail::matching_offsets(pencil, c);
      for (auto it = lo; it != hi; ++it) ++profiles[it->second].count;
    }
  }
  return profiles;
}

// Maps incidence count -> number of lines with that count.
inline std::map<std::int64_t, std::int64_t> incidence_histogram(const Configuration& config) {
  std::map<std::int64_t, std::int64_t> histogram;
  for (const LineIncidenceProfile& profile : line_profiles(config)) ++histogram[profile.count];
  return histogram;
}

inline constexpr std::size_t kOracleCap = 5000;

// Every line through two or more of the given points, with its exact number
// of incident points, sorted by canonical line. O(n^2 log n).
//
// For each point p, the other points are grouped by the direction of the line
// they span with p. A group of size t gives a line with t + 1 points; it is
// reported from p only when p is the smallest point on it.
inline std::vector<LineIncidenceProfile> all_lines_through_pairs(
    std::span<const LatticePoint> input, std::size_t cap = kOracleCap, unsigned threads = 1) {
  if (input.size() > cap) {
    throw ValidationError("all_lines_through_pairs: " + std::to_string(input.size()) +
                          " points exceeds oracle cap of " + std::to_string(cap));
  }
  std::vector<LatticePoint> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<std::vector<LineIncidenceProfile>> found(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    struct Spoke {
      Direction normal;
      bool from_smaller;
      auto operator<=>(const Spoke&) const = default;
    };
    std::vector<Spoke> spokes;
    spokes.reserve(points.size());
    const LatticePoint& p = points[i];
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const std::int64_t dx = checked::sub(points[j].x, p.x);
      const std::int64_t dy = checked::sub(points[j].y, p.y);
      const CanonicalLine through_origin = canonicalize_line(dy, checked::neg(dx), 0);
      spokes.push_back({direction_of(through_origin), j < i});
    }
    std::sort(spokes.begin(), spokes.end());
    for (std::size_t s = 0; s < spokes.size();) {
      std::size_t e = s;
      bool seen_smaller = false;
      while (e < spokes.size() && spokes[e].normal == spokes[s].normal) {
        seen_smaller = seen_smaller || spokes[e].from_smaller;
        ++e;
      }
      if (!seen_smaller) {
        const Direction& d = spokes[s].normal;
        found[i].push_back({canonicalize_line(d, checked::dot(d.a, p.x, d.b, p.y)),
                            static_cast<std::int64_t>(e - s) + 1});
      }
      s = e;
    }
  });

  std::vector<LineIncidenceProfile> lines;
  for (auto& chunk : found) lines.insert(lines.end(), chunk.begin(), chunk.end());
  std::sort(lines.begin(), lines.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.line < rhs.line; });
  return lines;
}

}  // namespace incidence
