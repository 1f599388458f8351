// SPDX-License-Identifier: Apache-2.0
#include "ppc/torus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ppc {

namespace {

double wrap_unit(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("frac: input must be finite");
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;  // rounding can land exactly on 1.0
  return f;
}

}  // namespace

TorusPoint::TorusPoint(double x) : value_(wrap_unit(x)) {}

TorusPoint frac(double x) { return TorusPoint(x); }

double torus_dist(double x, double y) noexcept {
  double d = std::fabs(x - y);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

std::int64_t box_count(double x, int level, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("box_count: radius must be positive");
  if (level < 0 || level > 52)
    throw std::invalid_argument("box_count: level must be in [0, 52]");
  const std::int64_t grid = std::int64_t{1} << level;
  if (radius >= 0.5) return grid;
  // Integers strictly between grid*(x-radius) and grid*(x+radius). The window
  // is narrower than the grid, so these map injectively mod 2^level.
  const double lo = static_cast<double>(grid) * (x - radius);
  const double hi = static_cast<double>(grid) * (x + radius);
  const std::int64_t count = static_cast<std::int64_t>(std::ceil(hi)) -
                             static_cast<std::int64_t>(std::floor(lo)) - 1;
  return count > 0 ? count : 0;
}

PointSet::PointSet(std::vector<double> xs) : xs_(std::move(xs)) {
  for (double& v : xs_) v = wrap_unit(v);
}

PointSet PointSet::from_unit(std::vector<double> xs) {
  for (double v : xs) {
    if (!(v >= 0.0) || !(v < 1.0))
      throw std::invalid_argument("PointSet::from_unit: value outside [0,1): " +
                                  std::to_string(v));
  }
  PointSet p;
  p.xs_ = std::move(xs);
  return p;
}

PointSet PointSet::prefix(std::size_t m) const {
  if (m > xs_.size())
    throw std::invalid_argument("PointSet::prefix: length exceeds sample size");
  PointSet p;
  p.xs_.assign(xs_.begin(), xs_.begin() + static_cast<std::ptrdiff_t>(m));
  return p;
}

}  // namespace ppc
