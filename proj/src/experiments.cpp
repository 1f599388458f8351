// SPDX-License-Identifier: Apache-2.0
#include "ppc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ppc {

namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.s_values.empty() || cfg.alpha_values.empty() || cfg.n_values.empty())
    throw std::invalid_argument("experiment config: s, alpha and n lists must be non-empty");
  if (cfg.replicates < 1)
    throw std::invalid_argument("experiment config: replicates must be >= 1");
  if (cfg.replicate_offset < 0)
    throw std::invalid_argument("experiment config: replicate_offset must be >= 0");
  for (double s : cfg.s_values)
    if (!(s > 0.0)) throw std::invalid_argument("experiment config: s must be positive");
  for (double a : cfg.alpha_values)
    if (!(a > 0.0 && a <= 1.0))
      throw std::invalid_argument("experiment config: alpha must lie in (0,1]");
  for (std::int64_t n : cfg.n_values)
    if (n < 2) throw std::invalid_argument("experiment config: n must be >= 2");
}

// Static-order task loop: worker threads pull task indices from an atomic
// counter and write into preallocated slots, so the outcome is identical for
// any thread count. The first worker exception is rethrown on the caller.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn) {
  const int threads = std::min<std::int64_t>(worker_thread_count(), count);
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    while (true) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

int worker_thread_count() {
  if (const char* env = std::getenv("PPC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(std::min<long>(v, 64));
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

ExperimentResult estimate_moments(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto n_count = static_cast<std::int64_t>(cfg.n_values.size());
  const std::int64_t reps = cfg.replicates;

  // r_values[n_idx][s_idx * n_alpha + a_idx][rep]
  const auto n_s = cfg.s_values.size();
  const auto n_alpha = cfg.alpha_values.size();
  std::vector<std::vector<std::vector<double>>> r_values(
      static_cast<std::size_t>(n_count),
      std::vector<std::vector<double>>(n_s * n_alpha,
                                       std::vector<double>(static_cast<std::size_t>(reps))));

  GeneratorSpec generator = cfg.generator;
  parallel_for(n_count * reps, [&](std::int64_t task) {
    const auto n_idx = static_cast<std::size_t>(task / reps);
    const auto rep = task % reps;
    const std::int64_t n = cfg.n_values[n_idx];
    GeneratorSpec gen = generator;
    gen.set_seed(SeedSpec{cfg.master_seed,
                          static_cast<std::uint64_t>(cfg.replicate_offset + rep)});
    const PointSet points = gen.generate(n);
    std::vector<double> sorted = points.values();
    std::sort(sorted.begin(), sorted.end());
    const double dn = static_cast<double>(n);
    for (std::size_t si = 0; si < n_s; ++si) {
      for (std::size_t ai = 0; ai < n_alpha; ++ai) {
        const PairCorrParams params(cfg.s_values[si], cfg.alpha_values[ai]);
        const auto count = pair_count_sorted(sorted, params.radius(n));
        r_values[n_idx][si * n_alpha + ai][static_cast<std::size_t>(rep)] =
            static_cast<double>(count) / std::pow(dn, 2.0 - params.alpha);
      }
    }
  });

  ExperimentResult result{cfg, {}};
  result.cells.reserve(n_s * n_alpha * static_cast<std::size_t>(n_count));
  for (std::size_t si = 0; si < n_s; ++si) {
    for (std::size_t ai = 0; ai < n_alpha; ++ai) {
      for (std::size_t ni = 0; ni < static_cast<std::size_t>(n_count); ++ni) {
        const auto& values = r_values[ni][si * n_alpha + ai];
        double sum = 0.0, lo = values.front(), hi = values.front();
        for (double v : values) {
          sum += v;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        const double mean = sum / static_cast<double>(reps);
        double var = 0.0;
        if (reps > 1) {
          double acc = 0.0;
          for (double v : values) acc += (v - mean) * (v - mean);
          var = acc / static_cast<double>(reps - 1);
        }
        result.cells.push_back(ExperimentCell{
            cfg.s_values[si], cfg.alpha_values[ai], cfg.n_values[ni], reps, mean, var,
            std::sqrt(var / static_cast<double>(reps)), lo, hi, values});
      }
    }
  }
  return result;
}

VarianceScan variance_decay_scan(const ExperimentConfig& cfg) {
  if (cfg.s_values.size() != 1 || cfg.alpha_values.size() != 1)
    throw std::invalid_argument(
        "variance_decay_scan: config must carry exactly one s and one alpha");
  if (cfg.n_values.size() < 3)
    throw std::invalid_argument("variance_decay_scan: need at least 3 sample sizes");
  if (cfg.replicates < 2)
    throw std::invalid_argument("variance_decay_scan: need >= 2 replicates per size");
  for (std::size_t i = 0; i + 1 < cfg.n_values.size(); ++i)
    if (cfg.n_values[i + 1] < 2 * cfg.n_values[i])
      throw std::invalid_argument(
          "variance_decay_scan: sample sizes must at least double");

  const ExperimentResult result = estimate_moments(cfg);
  VarianceScan scan;
  scan.points.reserve(result.cells.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& cell : result.cells) {
    scan.points.push_back(VariancePoint{cell.n, cell.var_r});
    const double x = std::log(static_cast<double>(cell.n));
    const double y = std::log(cell.var_r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto m = static_cast<double>(scan.points.size());
  scan.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return scan;
}

double adjacent_pair_probability(std::int64_t n, std::int64_t replicates,
                                 std::uint64_t master_seed,
                                 std::optional<double> radius) {
  if (n < 4 || (n & (n - 1)) != 0)
    throw std::invalid_argument(
        "adjacent_pair_probability: n must be a power of two >= 4");
  if (replicates < 1)
    throw std::invalid_argument("adjacent_pair_probability: replicates must be >= 1");
  const double r = radius.value_or(1.0 / (2.0 * static_cast<double>(n)));
  if (r < 0.0)
    throw std::invalid_argument("adjacent_pair_probability: radius must be >= 0");

  std::vector<std::int64_t> hits(static_cast<std::size_t>(replicates), 0);
  parallel_for(replicates, [&](std::int64_t rep) {
    const PointSet points = gen_sequential_jittered(
        n, SeedSpec{master_seed, static_cast<std::uint64_t>(rep)});
    // one point per dyadic cell; cell index is exact for dyadic widths
    std::vector<double> by_cell(static_cast<std::size_t>(n));
    for (double x : points)
      by_cell[static_cast<std::size_t>(x * static_cast<double>(n))] = x;
    std::int64_t h = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      const double a = by_cell[static_cast<std::size_t>(k)];
      const double b = by_cell[static_cast<std::size_t>((k + 1) % n)];
      if (torus_dist(a, b) <= r) ++h;
    }
    hits[static_cast<std::size_t>(rep)] = h;
  });
  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;
  return static_cast<double>(total) /
         (static_cast<double>(n) * static_cast<double>(replicates));
}

}  // namespace ppc
