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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "incidence/checked.hpp"
#include "incidence/numtheory.hpp"

namespace incidence {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// A line a*x + b*y = c with gcd(|a|, |b|) = 1 and a > 0, or a = 0 and b > 0.
// Only canonicalize_line() and the generators produce these, so equality of
// values is equality of solution sets.
class CanonicalLine {
 public:
  constexpr CanonicalLine() = default;

  constexpr std::int64_t a() const noexcept { return a_; }
  constexpr std::int64_t b() const noexcept { return b_; }
  constexpr std::int64_t c() const noexcept { return c_; }

  constexpr bool vertical() const noexcept { return b_ == 0; }

  friend constexpr auto operator<=>(const CanonicalLine&, const CanonicalLine&) = default;

 private:
  constexpr CanonicalLine(std::int64_t a, std::int64_t b, std::int64_t c) noexcept
      : a_(a), b_(b), c_(c) {}

  friend CanonicalLine canonicalize_line(std::int64_t, std::int64_t, std::int64_t);

  std::int64_t a_ = 1;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
};

// Normal direction of a pencil of parallel lines.
struct Direction {
  std::int64_t a = 0;
  std::int64_t b = 1;

  std::int64_t norm() const { return checked::add(checked::abs(a), checked::abs(b)); }

  friend constexpr auto operator<=>(const Direction&, const Direction&) = default;
};

enum class Construction {
  kElekes,
  kClassicElekes,
  kErdos,
  kCustom,
};

inline std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::kElekes:
      return "elekes";
    case Construction::kClassicElekes:
      return "classic-elekes";
    case Construction::kErdos:
      return "erdos";
    case Construction::kCustom:
      return "custom";
  }
  return "custom";
}

inline Construction parse_construction(std::string_view name) {
  if (name == "elekes") return Construction::kElekes;
  if (name == "classic-elekes") return Construction::kClassicElekes;
  if (name == "erdos") return Construction::kErdos;
  if (name == "custom") return Construction::kCustom;
  throw ValidationError("unknown construction '" + std::string(name) +
                        "' (expected elekes, classic-elekes or erdos)");
}

struct Provenance {
  Construction construction = Construction::kCustom;
  std::int64_t k = 0;
  std::int64_t m = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Configuration {
  std::vector<LatticePoint> points;
  std::vector<CanonicalLine> lines;
  Provenance provenance;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct IncidenceStats {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t incidences = 0;
  double constant = 0.0;
  bool regime_ok = false;

  // n*l above 2^53 cannot be represented exactly in binary64.
  bool reduced_precision() const {
    const auto product = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(l);
    return product > (static_cast<unsigned __int128>(1) << 53);
  }
};

// Returns (a, b, c) / gcd(|a|, |b|), sign-flipped so that a > 0 or
// (a = 0 and b > 0).
inline CanonicalLine canonicalize_line(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0) throw ValidationError("degenerate line: a = b = 0");
  const std::int64_t g = gcd(a, b);
  if (c % g != 0) {
    throw ValidationError("line is not integer-canonical: gcd(|a|,|b|) does not divide c");
  }
  std::int64_t ra = a / g;
  std::int64_t rb = b / g;
  std::int64_t rc = c / g;
  if (ra < 0 || (ra == 0 && rb < 0)) {
    ra = checked::neg(ra);
    rb = checked::neg(rb);
    rc = checked::neg(rc);
  }
  return CanonicalLine(ra, rb, rc);
}

inline CanonicalLine canonicalize_line(Direction d, std::int64_t c) {
  return canonicalize_line(d.a, d.b, c);
}

// The line y = slope*x + intercept.
inline CanonicalLine line_from_slope(std::int64_t slope, std::int64_t intercept) {
  return canonicalize_line(slope, -1, checked::neg(intercept));
}

inline Direction direction_of(const CanonicalLine& line) { return {line.a(), line.b()}; }

inline bool point_on_line(const LatticePoint& p, const CanonicalLine& line) {
  return checked::dot(line.a(), p.x, line.b(), p.y) == line.c();
}

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

inline std::ostream& operator<<(std::ostream& os, const CanonicalLine& line) {
  return os << line.a() << "x + " << line.b() << "y = " << line.c();
}

inline std::ostream& operator<<(std::ostream& os, const Direction& d) {
  return os << '(' << d.a << ", " << d.b << ')';
}

}  // namespace incidence

template <>
struct std::hash<incidence::CanonicalLine> {
  std::size_t operator()(const incidence::CanonicalLine& line) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(line.a());
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(line.b());
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(line.c());
    return h;
  }
};

template <>
struct std::hash<incidence::Direction> {
  std::size_t operator()(const incidence::Direction& d) const noexcept {
    return std::hash<std::int64_t>{}(d.a) * 0x9E3779B97F4A7C15ull ^
           std::hash<std::int64_t>{}(d.b);
  }
};
