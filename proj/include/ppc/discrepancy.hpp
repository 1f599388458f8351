// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "ppc/torus.hpp"

namespace ppc {

struct DiscrepancyResult {
  double value;  // in [1/N, 1]
  std::int64_t n;
};

// Exact two-sided discrepancy sup over intervals [a,b) of
// |count/N - (b-a)|, via the classical sorted-sample identity
// D_N = 1/N + max_i(i/N - x_(i)) - min_i(i/N - x_(i)).
DiscrepancyResult extreme_discrepancy(const PointSet& points);

// Literal evaluation over the finite candidate endpoint set
// {x_i} ∪ {0,1} with open/closed boundary corrections (the sup of the
// piecewise-linear deviation is attained in the closure of that family).
// O(N^2); inputs above 4096 points are rejected.
DiscrepancyResult discrepancy_bruteforce(const PointSet& points);

}  // namespace ppc
