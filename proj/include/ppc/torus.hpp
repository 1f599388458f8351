// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ppc {

// A point on the unit torus [0,1). Construction wraps any finite real via
// the fractional part; an exact 1.0 (possible rounding artifact of
// x - floor(x) for tiny negative x) is clamped to 0 so the half-open
// invariant always holds.
class TorusPoint {
 public:
  constexpr TorusPoint() = default;
  explicit TorusPoint(double x);

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }
  friend auto operator<=>(TorusPoint, TorusPoint) = default;

 private:
  double value_ = 0.0;
};

// Fractional part x - floor(x), wrapped into [0,1). Rejects non-finite input.
TorusPoint frac(double x);

// Distance to the nearest integer of x - y; symmetric, at most 1/2.
double torus_dist(double x, double y) noexcept;

// card{0 <= j < 2^level : j/2^level lies in the open interval
// (x - radius, x + radius) taken mod 1}. Grid points exactly at distance
// `radius` are excluded. If 2*radius >= 1 the interval covers the torus and
// the whole grid is returned. Levels above 52 would exceed double-precision
// index resolution and are rejected.
std::int64_t box_count(double x, int level, double radius);

// Finite ordered sample on the torus. Order is generation order: the prefix
// of length m of a sequence realization is its first m terms.
class PointSet {
 public:
  PointSet() = default;

  // Wraps every entry into [0,1).
  explicit PointSet(std::vector<double> xs);

  // Entries must already lie in [0,1); validated.
  static PointSet from_unit(std::vector<double> xs);

  void push_back(TorusPoint p) { xs_.push_back(p.value()); }

  std::size_t size() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }
  double operator[](std::size_t i) const noexcept { return xs_[i]; }
  const std::vector<double>& values() const noexcept { return xs_; }

  PointSet prefix(std::size_t m) const;

  auto begin() const noexcept { return xs_.begin(); }
  auto end() const noexcept { return xs_.end(); }

 private:
  std::vector<double> xs_;
};

}  // namespace ppc
