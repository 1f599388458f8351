// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ppc/rng.hpp"
#include "ppc/step_distribution.hpp"
#include "ppc/torus.hpp"

namespace ppc {

// n independent uniform draws on [0,1).
PointSet gen_iid_uniform(std::int64_t n, SeedSpec seed);

// One jittered sample of size m: exactly one uniform point per cell
// [k/m,(k+1)/m), cells assigned by a uniformly random permutation.
PointSet gen_jittered_single(std::int64_t m, SeedSpec seed);

// ceil(n/m) independent jittered samples of size m, concatenated and
// truncated to n points. Each batch draws from its own derived stream
// (child index = batch number), so batches are independent and the result
// is reproducible under any evaluation order.
PointSet gen_batch_jittered(std::int64_t m, std::int64_t n, SeedSpec seed);

// Doubling construction: points 1-2 form a jittered sample of size 2; given
// 2^k points (one per dyadic cell of width 2^-k), the 2^k void cells of
// width 2^-(k+1), listed left to right, receive one uniform point each in a
// freshly permuted order. Truncated to n points; for a fixed seed the result
// of length n is a prefix of the result of any length m >= n.
PointSet gen_sequential_jittered(std::int64_t n, SeedSpec seed);

// Random walk on the torus: X_1 = {x1}, X_{k+1} = {X_k + Y_k} with Y_k
// i.i.d. from `step`.
PointSet gen_random_walk(std::int64_t n, double x1, const StepDistribution& step,
                         SeedSpec seed);

// Deterministic comparison sequence x_k = {x1 + (k-1) c}.
PointSet gen_kronecker(std::int64_t n, double x1, double c);

// Single draw from a step law (exposed for tests and diagnostics).
TorusPoint sample_step(const StepDistribution& step, SplitStream& stream);

// Unbiased Fisher-Yates permutation of {0,...,n-1}.
std::vector<std::int64_t> random_permutation(std::int64_t n, SplitStream& stream);

// Self-describing recipe for any sequence construction.
class GeneratorSpec {
 public:
  struct IidUniform {};
  struct JitteredSingle {
    std::int64_t cells;
  };
  struct BatchJittered {
    std::int64_t cells;
  };
  struct SequentialJittered {};
  struct RandomWalk {
    double start;
    StepDistribution step;
  };
  struct Kronecker {
    double start;
    double step;
  };
  using Variant = std::variant<IidUniform, JitteredSingle, BatchJittered,
                               SequentialJittered, RandomWalk, Kronecker>;

  GeneratorSpec(Variant v, SeedSpec seed);

  PointSet generate(std::int64_t n) const;

  const Variant& variant() const noexcept { return variant_; }
  SeedSpec seed() const noexcept { return seed_; }
  void set_seed(SeedSpec seed) noexcept { seed_ = seed; }

  // Short config name: iid | jittered | batch | sequential | walk | kronecker
  std::string kind_name() const;
  // Human-readable one-liner including variant parameters (not the seed).
  std::string describe() const;

 private:
  Variant variant_;
  SeedSpec seed_;
};

}  // namespace ppc
