// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ppc/experiments.hpp"

namespace ppc {

// Canned experiment sweeps with documented acceptance bands. A preset maps
// to one config per generator variant it sweeps (e.g. one per batch size M),
// all sharing a fixed master seed.
struct ThmPreset {
  std::string id;
  std::vector<ExperimentConfig> configs;
};

// Known ids: thm1_batch_ppc, thm2i_seq_not_ppc, thm2ii_seq_weak_ppc,
// thm3_walk_ppc, ex_two_point, ex_kronecker.
ThmPreset theorem_preset(const std::string& id);

std::vector<std::string> preset_ids();

struct CheckLine {
  std::string label;
  bool pass;
  std::string detail;
};

// Evaluates the preset's acceptance bands against the results of running
// each of its configs (in order).
std::vector<CheckLine> check_preset(const ThmPreset& preset,
                                    const std::vector<ExperimentResult>& results);

// Triangular density on [0,1] (peak 2 at 1/2) discretized to `cells`
// mean-one values; the stock "bounded density beyond the built-ins".
StepDistribution triangle_density(std::int64_t cells = 64);

// (sqrt(5)-1)/2, the stock badly approximable Kronecker step.
double golden_ratio_step();

}  // namespace ppc
