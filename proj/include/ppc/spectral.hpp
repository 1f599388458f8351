// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ppc/step_distribution.hpp"

namespace ppc {

struct FourierCoefficient {
  std::int64_t r;              // non-zero index
  std::complex<double> value;  // E[exp(2 pi i r Y)], |value| <= 1
};

// Closed form for uniform_interval / two_point / constant; exact per-cell
// integration of the staircase for tabulated densities. r = 0 is rejected
// (trivially 1).
FourierCoefficient fourier_coeff(const StepDistribution& step, std::int64_t r);

// max_{1 <= |r| <= r_max} |c_r|. Y is real-valued, so |c_-r| = |c_r| and the
// scan runs over positive r. The true sup is over all r; for the built-in
// laws |c_r| decays monotonically and the default r_max = 64 is exact, while
// rough tabulated densities may need a larger r_max.
double sup_fourier(const StepDistribution& step, std::int64_t r_max = 64);

// sup_x |G_n(x) - x| for the n-fold sum of the step law, where G_n is the
// distribution function of {Y_1 + ... + Y_n}. The step density is
// discretized on `grid` cells (power of two >= 256), the n-fold circular
// convolution is formed in the Fourier domain, and the CDF deviation is
// evaluated at the grid points (where the piecewise-linear deviation attains
// its maximum). Step laws without a density are rejected.
double nfold_cdf_deviation(const StepDistribution& step, std::int64_t n,
                           std::int64_t grid = 1 << 14);

struct ConvergenceProfile {
  std::vector<std::int64_t> n_values;
  std::vector<double> sup_devs;
  double fitted_omega = 0.0;  // exp(slope) of log(sup_dev) against n
  double fitted_c = 0.0;      // exp(intercept)
  bool degenerate = false;    // some deviation fell below grid resolution
};

// Least-squares fit of log(sup_dev) against n over an increasing n_range of
// length >= 3. Deviations below 1e-12 mark the fit degenerate (the law is
// already uniform at grid resolution) and no rate is reported.
ConvergenceProfile schatte_rate_fit(const StepDistribution& step,
                                    const std::vector<std::int64_t>& n_range,
                                    std::int64_t grid = 1 << 14);

// n-fold cell masses of the discretized step law (sum 1); exposed for the
// convolution invariants (mass conservation, density bound preservation).
std::vector<double> nfold_cell_masses(const StepDistribution& step, std::int64_t n,
                                      std::int64_t grid = 1 << 14);

}  // namespace ppc
