// SPDX-License-Identifier: Apache-2.0
#include "ppc/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(double turns) {
  return std::polar(1.0, kTwoPi * turns);
}

// Iterative radix-2 FFT, in place. Size must be a power of two. Twiddles are
// computed per butterfly from sin/cos, which keeps the roundoff well below
// the 1e-9 mass tolerances used downstream.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 1.0 : -1.0) * kTwoPi / static_cast<double>(len);
    for (std::size_t blk = 0; blk < n; blk += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto w = std::polar(1.0, ang * static_cast<double>(k));
        const auto u = a[blk + k];
        const auto v = a[blk + k + len / 2] * w;
        a[blk + k] = u + v;
        a[blk + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

bool is_pow2(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

// n-fold circular convolution of a grid-cell density, in the Fourier domain.
// One fold of two piecewise-constant cell densities splits each product mass
// evenly between adjacent cells (the sum of two cell-uniform variables is
// triangular across two cells), so each fold beyond the first multiplies by
// the half-cell smear (1 + e^{-2 pi i k/G})/2. This keeps cell masses of the
// true n-fold law exact up to O(n/G^2) projection error.
class Convolver {
 public:
  Convolver(const StepDistribution& step, std::int64_t grid) : grid_(grid) {
    if (!step.has_density())
      throw std::invalid_argument(
          "n-fold convolution requires a step law with a Lebesgue density");
    if (!is_pow2(grid) || grid < 256)
      throw std::invalid_argument("grid size must be a power of two >= 256");
    const auto masses = step.cell_masses(grid);
    base_.assign(masses.begin(), masses.end());
    fft_inplace(base_, false);
    smear_.resize(static_cast<std::size_t>(grid));
    for (std::int64_t k = 0; k < grid; ++k)
      smear_[static_cast<std::size_t>(k)] =
          0.5 * (1.0 + unit_phase(-static_cast<double>(k) / static_cast<double>(grid)));
  }

  std::vector<double> masses(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("fold count must be >= 1");
    std::vector<std::complex<double>> hat(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k)
      hat[k] = cpow(base_[k], n) * cpow(smear_[k], n - 1);
    fft_inplace(hat, true);
    std::vector<double> out(hat.size());
    for (std::size_t k = 0; k < hat.size(); ++k) out[k] = hat[k].real();
    return out;
  }

  double deviation(std::int64_t n) const {
    const auto m = masses(n);
    double cum = 0.0, worst = 0.0;
    const double g = static_cast<double>(grid_);
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
      cum += m[k];
      worst = std::max(worst, std::fabs(cum - static_cast<double>(k + 1) / g));
    }
    return worst;
  }

 private:
  static std::complex<double> cpow(std::complex<double> base, std::int64_t e) {
    std::complex<double> acc{1.0, 0.0};
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::int64_t grid_;
  std::vector<std::complex<double>> base_;
  std::vector<std::complex<double>> smear_;
};

}  // namespace

FourierCoefficient fourier_coeff(const StepDistribution& step, std::int64_t r) {
  if (r == 0) throw std::invalid_argument("fourier_coeff: r must be non-zero");
  const double rd = static_cast<double>(r);
  const auto& var = step.variant();
  std::complex<double> c;
  if (const auto* u = std::get_if<StepDistribution::UniformInterval>(&var)) {
    const auto num = unit_phase(rd * u->b) - unit_phase(rd * u->a);
    c = num / std::complex<double>(0.0, kTwoPi * rd * (u->b - u->a));
  } else if (const auto* t = std::get_if<StepDistribution::TwoPoint>(&var)) {
    c = t->p * unit_phase(rd * t->atom1) + (1.0 - t->p) * unit_phase(rd * t->atom2);
  } else if (const auto* k = std::get_if<StepDistribution::Constant>(&var)) {
    c = unit_phase(rd * frac(k->c).value());
  } else {
    const auto& tab = std::get<StepDistribution::Tabulated>(var);
    const auto cells = static_cast<double>(tab.values.size());
    const std::complex<double> den(0.0, kTwoPi * rd);
    double total = 0.0;
    for (double v : tab.values) total += v / cells;
    for (std::size_t j = 0; j < tab.values.size(); ++j) {
      const double lo = static_cast<double>(j) / cells;
      const double hi = static_cast<double>(j + 1) / cells;
      c += (tab.values[j] / total) * (unit_phase(rd * hi) - unit_phase(rd * lo)) / den;
    }
  }
  return FourierCoefficient{r, c};
}

double sup_fourier(const StepDistribution& step, std::int64_t r_max) {
  if (r_max < 1) throw std::invalid_argument("sup_fourier: r_max must be >= 1");
  double sup = 0.0;
  for (std::int64_t r = 1; r <= r_max; ++r)
    sup = std::max(sup, std::abs(fourier_coeff(step, r).value));
  return sup;
}

double nfold_cdf_deviation(const StepDistribution& step, std::int64_t n,
                           std::int64_t grid) {
  return Convolver(step, grid).deviation(n);
}

std::vector<double> nfold_cell_masses(const StepDistribution& step, std::int64_t n,
                                      std::int64_t grid) {
  return Convolver(step, grid).masses(n);
}

ConvergenceProfile schatte_rate_fit(const StepDistribution& step,
                                    const std::vector<std::int64_t>& n_range,
                                    std::int64_t grid) {
  if (n_range.size() < 3)
    throw std::invalid_argument("schatte_rate_fit: need at least 3 fold counts");
  for (std::size_t i = 0; i + 1 < n_range.size(); ++i)
    if (n_range[i + 1] <= n_range[i])
      throw std::invalid_argument("schatte_rate_fit: fold counts must increase");

  const Convolver conv(step, grid);
  ConvergenceProfile profile;
  profile.n_values = n_range;
  profile.sup_devs.reserve(n_range.size());
  constexpr double kResolutionFloor = 1e-12;
  for (const std::int64_t n : n_range) {
    const double dev = conv.deviation(n);
    profile.sup_devs.push_back(dev);
    if (dev < kResolutionFloor) profile.degenerate = true;
  }
  if (profile.degenerate) return profile;

  // least squares of log(dev) on n
  const auto m = static_cast<double>(n_range.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n_range.size(); ++i) {
    const double x = static_cast<double>(n_range[i]);
    const double y = std::log(profile.sup_devs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  profile.fitted_omega = std::exp(slope);
  profile.fitted_c = std::exp(intercept);
  return profile;
}

}  // namespace ppc
