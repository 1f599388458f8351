// SPDX-License-Identifier: Apache-2.0
#include "ppc/presets.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ppc {

namespace {

constexpr std::uint64_t kPresetSeed = 20240817;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ExperimentConfig make_config(GeneratorSpec::Variant variant, std::vector<double> s,
                             std::vector<double> alpha, std::vector<std::int64_t> n,
                             std::int64_t replicates) {
  return ExperimentConfig{
      GeneratorSpec(std::move(variant), SeedSpec{kPresetSeed, 0}),
      std::move(s),
      std::move(alpha),
      std::move(n),
      replicates,
      0,
      kPresetSeed};
}

// |mean - target| <= max(3 stderr, rel * target)
CheckLine band_check(const std::string& label, const ExperimentCell& cell,
                     double target, double rel) {
  const double tol = std::max(3.0 * cell.stderr_r, rel * target);
  const double dev = std::fabs(cell.mean_r - target);
  return CheckLine{label, dev <= tol,
                   "mean_R=" + fmt(cell.mean_r) + " target=" + fmt(target) +
                       " |dev|=" + fmt(dev) + " tol=" + fmt(tol)};
}

}  // namespace

StepDistribution triangle_density(std::int64_t cells) {
  if (cells < 2 || cells % 2 != 0)
    throw std::invalid_argument("triangle_density: cells must be even and >= 2");
  std::vector<double> values(static_cast<std::size_t>(cells));
  const double kc = static_cast<double>(cells);
  for (std::int64_t k = 0; k < cells; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) / kc;
    values[static_cast<std::size_t>(k)] = mid <= 0.5 ? 4.0 * mid : 4.0 * (1.0 - mid);
  }
  return StepDistribution::tabulated_density(std::move(values));
}

double golden_ratio_step() { return (std::sqrt(5.0) - 1.0) / 2.0; }

ThmPreset theorem_preset(const std::string& id) {
  if (id == "thm1_batch_ppc") {
    ThmPreset preset{id, {}};
    for (std::int64_t m : {2, 8, 32})
      preset.configs.push_back(make_config(GeneratorSpec::BatchJittered{m},
                                           {0.5, 1.0, 2.0}, {1.0}, {1 << 14}, 100));
    return preset;
  }
  if (id == "thm2i_seq_not_ppc") {
    return ThmPreset{id,
                     {make_config(GeneratorSpec::SequentialJittered{}, {0.5}, {1.0},
                                  {1 << 12}, 200)}};
  }
  if (id == "thm2ii_seq_weak_ppc") {
    return ThmPreset{id,
                     {make_config(GeneratorSpec::SequentialJittered{}, {0.5, 1.0},
                                  {0.25, 0.5, 0.75}, {1 << 16}, 50)}};
  }
  if (id == "thm3_walk_ppc") {
    ThmPreset preset{id, {}};
    const StepDistribution steps[] = {StepDistribution::uniform_interval(0.0, 1.0),
                                      StepDistribution::uniform_interval(0.0, 0.5),
                                      triangle_density()};
    for (const auto& step : steps)
      preset.configs.push_back(make_config(GeneratorSpec::RandomWalk{0.0, step}, {1.0},
                                           {1.0}, {1 << 15}, 50));
    return preset;
  }
  if (id == "ex_two_point") {
    return ThmPreset{
        id,
        {make_config(
            GeneratorSpec::RandomWalk{0.0, StepDistribution::two_point(0.0, 0.5, 0.5)},
            {1.0}, {1.0}, {1 << 12}, 10)}};
  }
  if (id == "ex_kronecker") {
    std::vector<std::int64_t> n_values;
    for (int k = 8; k <= 16; ++k) n_values.push_back(std::int64_t{1} << k);
    return ThmPreset{id,
                     {make_config(GeneratorSpec::Kronecker{0.0, golden_ratio_step()},
                                  {1.0}, {0.5, 1.0}, std::move(n_values), 1)}};
  }
  throw std::invalid_argument("unknown preset id '" + id + "'");
}

std::vector<std::string> preset_ids() {
  return {"thm1_batch_ppc", "thm2i_seq_not_ppc", "thm2ii_seq_weak_ppc",
          "thm3_walk_ppc",  "ex_two_point",      "ex_kronecker"};
}

std::vector<CheckLine> check_preset(const ThmPreset& preset,
                                    const std::vector<ExperimentResult>& results) {
  if (results.size() != preset.configs.size())
    throw std::invalid_argument("check_preset: one result per preset config expected");
  std::vector<CheckLine> lines;

  if (preset.id == "thm1_batch_ppc") {
    for (const auto& result : results) {
      const auto m =
          std::get<GeneratorSpec::BatchJittered>(result.config.generator.variant()).cells;
      for (const auto& cell : result.cells)
        lines.push_back(band_check("batch M=" + std::to_string(m) + " s=" + fmt(cell.s),
                                   cell, 2.0 * cell.s, 0.03));
    }
  } else if (preset.id == "thm2i_seq_not_ppc") {
    const auto& cell = results[0].cells.at(0);
    const bool in_band = cell.mean_r >= 0.22 && cell.mean_r <= 0.28;
    lines.push_back(CheckLine{"sequential s=1/2 mean near 1/4", in_band,
                              "mean_R=" + fmt(cell.mean_r) + " band=[0.22,0.28]"});
    const double gap = std::fabs(cell.mean_r - 1.0);
    lines.push_back(CheckLine{
        "sequential s=1/2 separated from PPC limit", gap >= 10.0 * cell.stderr_r,
        "|mean_R - 1|=" + fmt(gap) + " needs >= 10*stderr=" + fmt(10.0 * cell.stderr_r)});
  } else if (preset.id == "thm2ii_seq_weak_ppc") {
    for (const auto& cell : results[0].cells)
      lines.push_back(band_check(
          "sequential alpha=" + fmt(cell.alpha) + " s=" + fmt(cell.s), cell,
          2.0 * cell.s, 0.05));
  } else if (preset.id == "thm3_walk_ppc") {
    for (const auto& result : results) {
      const auto& walk =
          std::get<GeneratorSpec::RandomWalk>(result.config.generator.variant());
      const auto& cell = result.cells.at(0);
      const double tol = std::max(3.0 * cell.stderr_r, 0.06);
      const double dev = std::fabs(cell.mean_r - 2.0);
      lines.push_back(CheckLine{"walk step=" + walk.step.to_string(), dev <= tol,
                                "mean_R=" + fmt(cell.mean_r) + " |dev|=" + fmt(dev) +
                                    " tol=" + fmt(tol)});
    }
  } else if (preset.id == "ex_two_point") {
    const auto& cell = results[0].cells.at(0);
    lines.push_back(CheckLine{"two-point walk R large on every seed", cell.min_r > 100.0,
                              "min_R=" + fmt(cell.min_r) + " needs > 100"});
  } else if (preset.id == "ex_kronecker") {
    bool found_half = false;
    bool escaped = false;
    double worst = 2.0;
    for (const auto& cell : results[0].cells) {
      if (cell.alpha == 0.5 && cell.n == (std::int64_t{1} << 16)) {
        found_half = true;
        lines.push_back(CheckLine{"kronecker alpha=0.5 N=2^16",
                                  std::fabs(cell.mean_r - 2.0) <= 0.1,
                                  "R=" + fmt(cell.mean_r) + " band=[1.9,2.1]"});
      }
      if (cell.alpha == 1.0) {
        if (cell.mean_r < 1.8 || cell.mean_r > 2.2) escaped = true;
        if (std::fabs(cell.mean_r - 2.0) > std::fabs(worst - 2.0)) worst = cell.mean_r;
      }
    }
    if (!found_half)
      lines.push_back(CheckLine{"kronecker alpha=0.5 N=2^16", false, "cell missing"});
    lines.push_back(CheckLine{"kronecker alpha=1 leaves [1.8,2.2] on the N scan",
                              escaped, "most extreme R=" + fmt(worst)});
  } else {
    throw std::invalid_argument("check_preset: unknown preset id '" + preset.id + "'");
  }
  return lines;
}

}  // namespace ppc
