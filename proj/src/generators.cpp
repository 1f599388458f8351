// SPDX-License-Identifier: Apache-2.0
#include "ppc/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ppc {

namespace {

// Point `u` of cell `cell` out of `m` equal cells. Division is exact for
// power-of-two m; for general m the result is nudged below the next cell
// boundary if the last rounding stepped onto it, so stratification is exact.
double cell_point(std::int64_t cell, std::int64_t m, double u) {
  const double md = static_cast<double>(m);
  double x = (static_cast<double>(cell) + u) / md;
  const double hi = static_cast<double>(cell + 1) / md;
  if (x >= hi) x = std::nextafter(hi, 0.0);
  return x;
}

void append_jittered(std::vector<double>& out, std::int64_t m, SplitStream& stream) {
  const auto perm = random_permutation(m, stream);
  for (std::int64_t k = 0; k < m; ++k)
    out.push_back(cell_point(perm[static_cast<std::size_t>(k)], m, stream.next_unit()));
}

}  // namespace

std::vector<std::int64_t> random_permutation(std::int64_t n, SplitStream& stream) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), std::int64_t{0});
  for (std::int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::int64_t>(
        stream.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

PointSet gen_iid_uniform(std::int64_t n, SeedSpec seed) {
  if (n < 1) throw std::invalid_argument("gen_iid_uniform: n must be >= 1");
  SplitStream stream(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) pts.push_back(stream.next_unit());
  return PointSet::from_unit(std::move(pts));
}

PointSet gen_jittered_single(std::int64_t m, SeedSpec seed) {
  if (m < 1) throw std::invalid_argument("gen_jittered_single: m must be >= 1");
  SplitStream stream(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(m));
  append_jittered(pts, m, stream);
  return PointSet::from_unit(std::move(pts));
}

PointSet gen_batch_jittered(std::int64_t m, std::int64_t n, SeedSpec seed) {
  if (m < 1) throw std::invalid_argument("gen_batch_jittered: m must be >= 1");
  if (n < 1) throw std::invalid_argument("gen_batch_jittered: n must be >= 1");
  const SplitStream root(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n + m));
  for (std::uint64_t batch = 0; static_cast<std::int64_t>(pts.size()) < n; ++batch) {
    SplitStream stream = root.substream(batch);
    append_jittered(pts, m, stream);
  }
  pts.resize(static_cast<std::size_t>(n));
  return PointSet::from_unit(std::move(pts));
}

PointSet gen_sequential_jittered(std::int64_t n, SeedSpec seed) {
  if (n < 2) throw std::invalid_argument("gen_sequential_jittered: n must be >= 2");
  SplitStream stream(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(2 * n));
  append_jittered(pts, 2, stream);
  while (static_cast<std::int64_t>(pts.size()) < n) {
    const auto full = static_cast<std::int64_t>(pts.size());  // a power of two
    const std::int64_t cells = 2 * full;
    std::vector<char> occupied(static_cast<std::size_t>(cells), 0);
    for (double x : pts)
      occupied[static_cast<std::size_t>(x * static_cast<double>(cells))] = 1;
    std::vector<std::int64_t> voids;
    voids.reserve(static_cast<std::size_t>(full));
    for (std::int64_t j = 0; j < cells; ++j)
      if (!occupied[static_cast<std::size_t>(j)]) voids.push_back(j);
    if (static_cast<std::int64_t>(voids.size()) != full)
      throw std::logic_error("gen_sequential_jittered: occupancy invariant broken");
    const auto perm = random_permutation(full, stream);
    for (std::int64_t j = 0; j < full; ++j)
      pts.push_back(cell_point(voids[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])],
                               cells, stream.next_unit()));
  }
  pts.resize(static_cast<std::size_t>(n));
  return PointSet::from_unit(std::move(pts));
}

PointSet gen_random_walk(std::int64_t n, double x1, const StepDistribution& step,
                         SeedSpec seed) {
  if (n < 1) throw std::invalid_argument("gen_random_walk: n must be >= 1");
  SplitStream stream(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  double x = frac(x1).value();
  pts.push_back(x);
  for (std::int64_t k = 1; k < n; ++k) {
    x = frac(x + step.sample(stream).value()).value();
    pts.push_back(x);
  }
  return PointSet::from_unit(std::move(pts));
}

PointSet gen_kronecker(std::int64_t n, double x1, double c) {
  if (n < 1) throw std::invalid_argument("gen_kronecker: n must be >= 1");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    pts.push_back(frac(x1 + static_cast<double>(k) * c).value());
  return PointSet::from_unit(std::move(pts));
}

TorusPoint sample_step(const StepDistribution& step, SplitStream& stream) {
  return step.sample(stream);
}

GeneratorSpec::GeneratorSpec(Variant v, SeedSpec seed)
    : variant_(std::move(v)), seed_(seed) {
  if (const auto* j = std::get_if<JitteredSingle>(&variant_)) {
    if (j->cells < 1) throw std::invalid_argument("GeneratorSpec: m must be >= 1");
  } else if (const auto* b = std::get_if<BatchJittered>(&variant_)) {
    if (b->cells < 1) throw std::invalid_argument("GeneratorSpec: m must be >= 1");
  }
}

PointSet GeneratorSpec::generate(std::int64_t n) const {
  return std::visit(
      [&](const auto& v) -> PointSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IidUniform>) {
          return gen_iid_uniform(n, seed_);
        } else if constexpr (std::is_same_v<T, JitteredSingle>) {
          if (n != v.cells)
            throw std::invalid_argument(
                "GeneratorSpec: a single jittered sample has exactly m points");
          return gen_jittered_single(v.cells, seed_);
        } else if constexpr (std::is_same_v<T, BatchJittered>) {
          return gen_batch_jittered(v.cells, n, seed_);
        } else if constexpr (std::is_same_v<T, SequentialJittered>) {
          return gen_sequential_jittered(n, seed_);
        } else if constexpr (std::is_same_v<T, RandomWalk>) {
          return gen_random_walk(n, v.start, v.step, seed_);
        } else {
          return gen_kronecker(n, v.start, v.step);
        }
      },
      variant_);
}

std::string GeneratorSpec::kind_name() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IidUniform>) return "iid";
        else if constexpr (std::is_same_v<T, JitteredSingle>) return "jittered";
        else if constexpr (std::is_same_v<T, BatchJittered>) return "batch";
        else if constexpr (std::is_same_v<T, SequentialJittered>) return "sequential";
        else if constexpr (std::is_same_v<T, RandomWalk>) return "walk";
        else return "kronecker";
      },
      variant_);
}

std::string GeneratorSpec::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IidUniform>) return "iid";
        else if constexpr (std::is_same_v<T, JitteredSingle>)
          return "jittered(m=" + std::to_string(v.cells) + ")";
        else if constexpr (std::is_same_v<T, BatchJittered>)
          return "batch(m=" + std::to_string(v.cells) + ")";
        else if constexpr (std::is_same_v<T, SequentialJittered>)
          return "sequential";
        else if constexpr (std::is_same_v<T, RandomWalk>)
          return "walk(step=" + v.step.to_string() + ")";
        else
          return "kronecker";
      },
      variant_);
}

}  // namespace ppc
