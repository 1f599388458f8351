// SPDX-License-Identifier: Apache-2.0
#include "ppc/paircorr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppc {

PairCorrParams::PairCorrParams(double s_, double alpha_) : s(s_), alpha(alpha_) {
  if (!(s > 0.0)) throw std::invalid_argument("PairCorrParams: s must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("PairCorrParams: alpha must lie in (0,1]");
}

double PairCorrParams::radius(std::int64_t n) const {
  return s / std::pow(static_cast<double>(n), alpha);
}

std::int64_t pair_count_naive(const PointSet& points, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("pair_count_naive: radius must be positive");
  const auto n = static_cast<std::int64_t>(points.size());
  if (radius >= 0.5) return n * (n - 1);
  std::int64_t unordered = 0;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      if (torus_dist(points[static_cast<std::size_t>(i)],
                     points[static_cast<std::size_t>(j)]) <= radius)
        ++unordered;
  return 2 * unordered;
}

std::int64_t pair_count_sorted(std::span<const double> sorted, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("pair_count_sorted: radius must be positive");
  const auto n = static_cast<std::int64_t>(sorted.size());
  if (n < 2) return 0;
  if (radius >= 0.5) return n * (n - 1);
  // For radius < 1/2 each close unordered pair is seen exactly once as a
  // right-neighbor event in the sorted cyclic order (the two arcs of a pair
  // sum to 1, so at most one is <= radius).
  std::int64_t unordered = 0;
  std::int64_t e = 1;  // frontier over the conceptually doubled array
  for (std::int64_t i = 0; i < n; ++i) {
    if (e < i + 1) e = i + 1;
    while (e < i + n) {
      const double v = e < n ? sorted[static_cast<std::size_t>(e)]
                             : sorted[static_cast<std::size_t>(e - n)] + 1.0;
      if (v - sorted[static_cast<std::size_t>(i)] <= radius)
        ++e;
      else
        break;
    }
    unordered += e - 1 - i;
  }
  return 2 * unordered;
}

std::int64_t pair_count_fast(const PointSet& points, double radius) {
  std::vector<double> sorted = points.values();
  std::sort(sorted.begin(), sorted.end());
  return pair_count_sorted(sorted, radius);
}

PairCorrResult r_statistic(const PointSet& points, const PairCorrParams& params) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (n < 2) throw std::invalid_argument("r_statistic: needs at least 2 points");
  const std::int64_t count = pair_count_fast(points, params.radius(n));
  const double value =
      static_cast<double>(count) / std::pow(static_cast<double>(n), 2.0 - params.alpha);
  return PairCorrResult{count, value, n, params};
}

std::int64_t neighbor_count(const PointSet& points, std::int64_t index,
                            const PairCorrParams& params) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (index < 0 || index >= n)
    throw std::invalid_argument("neighbor_count: index out of range");
  const double radius = params.radius(n);
  const double xi = points[static_cast<std::size_t>(index)];
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < n; ++j)
    if (j != index && torus_dist(xi, points[static_cast<std::size_t>(j)]) <= radius)
      ++count;
  return count;
}

std::vector<double> circular_gaps(const PointSet& points) {
  const auto n = points.size();
  if (n < 2) throw std::invalid_argument("circular_gaps: needs at least 2 points");
  std::vector<double> sorted = points.values();
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> gaps;
  gaps.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) gaps.push_back(sorted[i + 1] - sorted[i]);
  gaps.push_back(1.0 - sorted[n - 1] + sorted[0]);
  return gaps;
}

GapHistogram gap_histogram(const PointSet& points, std::int64_t bins) {
  if (bins < 1) throw std::invalid_argument("gap_histogram: bins must be >= 1");
  const auto gaps = circular_gaps(points);
  const double scale = static_cast<double>(points.size());
  double upper = 0.0;
  for (double g : gaps) upper = std::max(upper, g * scale);
  GapHistogram hist{upper, std::vector<std::int64_t>(static_cast<std::size_t>(bins), 0),
                    static_cast<std::int64_t>(gaps.size())};
  // gaps sum to 1, so upper >= 1 and the division below is safe
  for (double g : gaps) {
    auto b = static_cast<std::int64_t>(g * scale / upper * static_cast<double>(bins));
    if (b >= bins) b = bins - 1;
    ++hist.counts[static_cast<std::size_t>(b)];
  }
  return hist;
}

}  // namespace ppc
