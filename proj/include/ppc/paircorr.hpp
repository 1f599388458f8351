// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppc/torus.hpp"

namespace ppc {

// Parameters of the pair-correlation statistic: counting window s/N^alpha.
struct PairCorrParams {
  double s;
  double alpha;

  PairCorrParams(double s_, double alpha_);
  double radius(std::int64_t n) const;
};

struct PairCorrResult {
  std::int64_t pair_count;  // ordered pairs (i,j), i != j
  double value;             // pair_count / N^(2-alpha)
  std::int64_t n;
  PairCorrParams params;
};

// Ordered pairs (i,j), i != j, with torus_dist(x_i, x_j) <= radius.
// Literal O(N^2) evaluation; the oracle for pair_count_fast.
std::int64_t pair_count_naive(const PointSet& points, double radius);

// Same count in O(N log N): sort, then a wrapping two-pointer window.
// Exact integer arithmetic; ties at the radius are counted, duplicates are
// legal input. radius >= 1/2 covers the torus and returns N(N-1).
std::int64_t pair_count_fast(const PointSet& points, double radius);

// Counting core on an already sorted [0,1) sample (ascending). Used by
// pair_count_fast and by the experiment harness, which sorts once per
// sample and counts for many radii.
std::int64_t pair_count_sorted(std::span<const double> sorted, double radius);

// R_alpha(s,N) = pair_count(s/N^alpha) / N^(2-alpha). Needs N >= 2.
PairCorrResult r_statistic(const PointSet& points, const PairCorrParams& params);

// card{j != i : torus_dist(x_i, x_j) <= s/N^alpha}; zero-based index.
std::int64_t neighbor_count(const PointSet& points, std::int64_t index,
                            const PairCorrParams& params);

// Circular nearest-neighbor gaps in sorted order (N gaps, summing to 1).
std::vector<double> circular_gaps(const PointSet& points);

struct GapHistogram {
  double upper;                      // histogram covers [0, upper]
  std::vector<std::int64_t> counts;  // gap scaled by N, values == upper in last bin
  std::int64_t n_gaps;
};

// Histogram of the circular gaps scaled by N (so the mean scaled gap is 1).
GapHistogram gap_histogram(const PointSet& points, std::int64_t bins);

}  // namespace ppc
