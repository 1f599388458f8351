// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppc/generators.hpp"
#include "ppc/paircorr.hpp"

namespace ppc {

// One Monte Carlo sweep: for every (s, alpha, n) cell, `replicates`
// independent realizations of the generator, with replicate i drawing from
// stream index replicate_offset + i under master_seed. Fully reproducible
// for a fixed master_seed, independent of worker thread count.
struct ExperimentConfig {
  GeneratorSpec generator;
  std::vector<double> s_values;
  std::vector<double> alpha_values;
  std::vector<std::int64_t> n_values;
  std::int64_t replicates = 1;
  std::int64_t replicate_offset = 0;
  std::uint64_t master_seed = 0;
};

struct ExperimentCell {
  double s;
  double alpha;
  std::int64_t n;
  std::int64_t replicates;
  double mean_r;
  double var_r;    // unbiased sample variance (0 for a single replicate)
  double stderr_r; // sqrt(var_r / replicates)
  double min_r;
  double max_r;
  std::vector<double> replicate_r;  // per-replicate values in replicate order
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentCell> cells;  // ordered by (s, alpha, n)
};

ExperimentResult estimate_moments(const ExperimentConfig& cfg);

struct VariancePoint {
  std::int64_t n;
  double var_r;
};

struct VarianceScan {
  std::vector<VariancePoint> points;
  double slope;  // log-log least-squares slope of Var(R) against n
};

// Variance decay over a geometric n grid (>= 3 values, each at least twice
// the previous). The config must carry exactly one s and one alpha.
VarianceScan variance_decay_scan(const ExperimentConfig& cfg);

// Empirical frequency, over replicates and over cyclically adjacent dyadic
// cells, of the two cell points being within `radius` (default 1/(2n)), for
// sequential jittered samples of size n = 2^k, k >= 2.
double adjacent_pair_probability(std::int64_t n, std::int64_t replicates,
                                 std::uint64_t master_seed,
                                 std::optional<double> radius = std::nullopt);

// Worker-thread cap: PPC_THREADS if set (clamped to [1,64]), else the
// hardware concurrency. Results never depend on it.
int worker_thread_count();

}  // namespace ppc
