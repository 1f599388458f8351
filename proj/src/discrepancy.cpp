// SPDX-License-Identifier: Apache-2.0
#include "ppc/discrepancy.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ppc {

DiscrepancyResult extreme_discrepancy(const PointSet& points) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (n < 1) throw std::invalid_argument("extreme_discrepancy: empty point set");
  std::vector<double> sorted = points.values();
  std::sort(sorted.begin(), sorted.end());
  const double dn = static_cast<double>(n);
  double hi = -2.0, lo = 2.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double dev = static_cast<double>(i + 1) / dn - sorted[static_cast<std::size_t>(i)];
    hi = std::max(hi, dev);
    lo = std::min(lo, dev);
  }
  return DiscrepancyResult{1.0 / dn + hi - lo, n};
}

DiscrepancyResult discrepancy_bruteforce(const PointSet& points) {
  const auto n = static_cast<std::int64_t>(points.size());
  if (n < 1) throw std::invalid_argument("discrepancy_bruteforce: empty point set");
  if (n > 4096)
    throw std::invalid_argument("discrepancy_bruteforce: more than 4096 points");
  std::vector<double> sorted = points.values();
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> cand = sorted;
  cand.push_back(0.0);
  cand.push_back(1.0);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  // rank_lt[v] = #points < v, rank_le[v] = #points <= v
  const auto m = cand.size();
  std::vector<std::int64_t> rank_lt(m), rank_le(m);
  for (std::size_t k = 0; k < m; ++k) {
    rank_lt[k] = std::lower_bound(sorted.begin(), sorted.end(), cand[k]) - sorted.begin();
    rank_le[k] = std::upper_bound(sorted.begin(), sorted.end(), cand[k]) - sorted.begin();
  }

  const double dn = static_cast<double>(n);
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double len = cand[j] - cand[i];
      // overfill limit: closed interval [a,b], shortest length
      const auto closed = rank_le[j] - rank_lt[i];
      best = std::max(best, static_cast<double>(closed) / dn - len);
      // underfill limit: open interval (a,b), longest length
      const auto open = rank_lt[j] - rank_le[i];
      best = std::max(best, len - static_cast<double>(std::max<std::int64_t>(open, 0)) / dn);
    }
  }
  return DiscrepancyResult{best, n};
}

}  // namespace ppc
