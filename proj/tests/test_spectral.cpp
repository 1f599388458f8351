// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ppc/presets.hpp"
#include "ppc/rng.hpp"
#include "ppc/spectral.hpp"

using namespace ppc;

namespace {

const double kTwoOverPi = 2.0 / std::numbers::pi;

StepDistribution random_step(SplitStream& stream) {
  switch (stream.next_below(4)) {
    case 0: {
      const double a = 0.8 * stream.next_unit();
      const double b = std::min(1.0, a + (1.0 - a) * (0.1 + 0.9 * stream.next_unit()));
      return StepDistribution::uniform_interval(a, b);
    }
    case 1:
      return StepDistribution::two_point(stream.next_unit(), stream.next_unit(),
                                         stream.next_unit());
    case 2:
      return StepDistribution::constant(2.0 * stream.next_unit());
    default: {
      std::vector<double> vals(8);
      double sum = 0.0;
      for (double& v : vals) {
        v = stream.next_unit();
        sum += v;
      }
      for (double& v : vals) v *= 8.0 / sum;
      return StepDistribution::tabulated_density(std::move(vals));
    }
  }
}

}  // namespace

TEST_CASE("fourier coefficients: exact values") {
  const auto full = StepDistribution::uniform_interval(0.0, 1.0);
  for (std::int64_t r = 1; r <= 8; ++r)
    CHECK(std::abs(fourier_coeff(full, r).value) <= 1e-12);

  const auto coin = StepDistribution::two_point(0.0, 0.5, 0.5);
  CHECK(std::abs(fourier_coeff(coin, 2).value) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(fourier_coeff(coin, 1).value) <= 1e-12);

  const auto half = StepDistribution::uniform_interval(0.0, 0.5);
  CHECK(std::abs(fourier_coeff(half, 1).value) == doctest::Approx(kTwoOverPi).epsilon(1e-9));
  CHECK(std::abs(fourier_coeff(half, 2).value) <= 1e-12);
  CHECK(std::abs(fourier_coeff(half, 3).value) ==
        doctest::Approx(kTwoOverPi / 3.0).epsilon(1e-9));

  CHECK_THROWS_AS(fourier_coeff(half, 0), std::invalid_argument);
}

TEST_CASE("fourier coefficient of tabulated density matches closed form") {
  // a 4-cell staircase equals a mixture of aligned uniform intervals
  const auto tab = StepDistribution::tabulated_density({2.0, 0.0, 1.0, 1.0});
  for (std::int64_t r = 1; r <= 6; ++r) {
    const auto direct = fourier_coeff(tab, r).value;
    std::complex<double> expected =
        0.5 * fourier_coeff(StepDistribution::uniform_interval(0.0, 0.25), r).value +
        0.5 * fourier_coeff(StepDistribution::uniform_interval(0.5, 1.0), r).value;
    CHECK(std::abs(direct - expected) <= 1e-12);
  }
}

TEST_CASE("characteristic-function bound |c_r| <= 1") {
  SplitStream stream(909, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto step = random_step(stream);
    const auto r = static_cast<std::int64_t>(1 + stream.next_below(64));
    CHECK(std::abs(fourier_coeff(step, r).value) <= 1.0 + 1e-12);
  }
}

TEST_CASE("sup_fourier") {
  CHECK(sup_fourier(StepDistribution::constant(0.377), 8) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_fourier(StepDistribution::uniform_interval(0.0, 1.0), 16) <= 1e-12);
  CHECK(sup_fourier(StepDistribution::uniform_interval(0.0, 0.5), 64) ==
        doctest::Approx(kTwoOverPi).epsilon(1e-9));
  CHECK(sup_fourier(StepDistribution::two_point(0.0, 0.5, 0.5), 4) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(sup_fourier(StepDistribution::constant(0.1), 0), std::invalid_argument);
}

TEST_CASE("n-fold CDF deviation: fixed point, closed form, decay") {
  const auto full = StepDistribution::uniform_interval(0.0, 1.0);
  CHECK(nfold_cdf_deviation(full, 1) < 1e-9);
  CHECK(nfold_cdf_deviation(full, 17) < 1e-9);

  const auto half = StepDistribution::uniform_interval(0.0, 0.5);
  // G_1 is the CDF of U[0,1/2]; sup |G_1(x) - x| = |1 - 1/2| at x = 1/2
  CHECK(nfold_cdf_deviation(half, 1) == doctest::Approx(0.5).epsilon(1e-9));
  // two folds give the triangular law; sup |2x^2 - x| = 1/8 at x = 1/4
  CHECK(nfold_cdf_deviation(half, 2) == doctest::Approx(0.125).epsilon(1e-6));
  CHECK(nfold_cdf_deviation(half, 40) < 1e-6);

  CHECK_THROWS_AS(nfold_cdf_deviation(StepDistribution::two_point(0.0, 0.5, 0.5), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(nfold_cdf_deviation(StepDistribution::constant(0.3), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(nfold_cdf_deviation(half, 0), std::invalid_argument);
  CHECK_THROWS_AS(nfold_cdf_deviation(half, 3, 1000), std::invalid_argument);
  CHECK_THROWS_AS(nfold_cdf_deviation(half, 3, 128), std::invalid_argument);
}

TEST_CASE("convolution invariants over n = 1..40") {
  const StepDistribution laws[] = {StepDistribution::uniform_interval(0.0, 1.0),
                                   StepDistribution::uniform_interval(0.0, 0.5),
                                   triangle_density()};
  const std::int64_t grid = 1 << 12;
  for (const auto& law : laws) {
    const double omega = sup_fourier(law, 64);
    double base_max = 0.0;
    for (double m : nfold_cell_masses(law, 1, grid)) base_max = std::max(base_max, m);
    std::vector<double> devs(41, 0.0);
    for (std::int64_t n = 1; n <= 40; ++n) {
      const auto masses = nfold_cell_masses(law, n, grid);
      double sum = 0.0, peak = 0.0;
      for (double m : masses) {
        sum += m;
        peak = std::max(peak, m);
      }
      CHECK(std::fabs(sum - 1.0) <= 1e-9);  // mass conserved
      CHECK(peak <= base_max + 1e-9);       // density bound kept
      const double dev = nfold_cdf_deviation(law, n, grid);
      devs[static_cast<std::size_t>(n)] = dev;
      if (n >= 5) CHECK(dev <= 2.0 * std::pow(omega, static_cast<double>(n)) + 1e-9);
    }
    // The deviation decays geometrically along each parity class. The raw
    // sequence itself is not monotone for laws with mean off the lattice:
    // for uniform(0,1/2), sup_dev(2) = 1/8 but G_3(1/2) = 1/3 gives
    // sup_dev(3) = 1/6 (the 3-fold sum is centered at 3/4).
    for (std::int64_t n = 1; n + 2 <= 40; ++n)
      CHECK(devs[static_cast<std::size_t>(n + 2)] <= devs[static_cast<std::size_t>(n)] + 1e-12);
  }
  CHECK(nfold_cdf_deviation(StepDistribution::uniform_interval(0.0, 0.5), 3, grid) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("convolution route matches the Fourier series route") {
  // independent evaluation of sup |G_n(x) - x| from the closed-form
  // coefficients: the +-r pair contributes 2 Re[c_r^n (1-e^{-2pi irx})/(2pi ir)]
  const auto series_dev = [](const StepDistribution& step, std::int64_t n) {
    std::vector<std::complex<double>> cpow;
    for (std::int64_t r = 1; r <= 41; ++r) {
      std::complex<double> c = fourier_coeff(step, r).value;
      std::complex<double> acc{1.0, 0.0};
      for (std::int64_t k = 0; k < n; ++k) acc *= c;
      cpow.push_back(acc);
    }
    double worst = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int xi = 0; xi < 4096; ++xi) {
      const double x = xi / 4096.0;
      double dev = 0.0;
      for (std::size_t ri = 0; ri < cpow.size(); ++ri) {
        const double r = static_cast<double>(ri + 1);
        const std::complex<double> osc =
            (1.0 - std::polar(1.0, -two_pi * r * x)) / std::complex<double>(0.0, two_pi * r);
        dev += 2.0 * (cpow[ri] * osc).real();
      }
      worst = std::max(worst, std::fabs(dev));
    }
    return worst;
  };
  const StepDistribution laws[] = {StepDistribution::uniform_interval(0.0, 0.5),
                                   triangle_density(),
                                   StepDistribution::uniform_interval(0.25, 0.75)};
  for (const auto& law : laws)
    for (std::int64_t n : {2, 3, 5, 8})
      CHECK(nfold_cdf_deviation(law, n, 1 << 12) ==
            doctest::Approx(series_dev(law, n)).epsilon(2e-3));
}

TEST_CASE("tabulated grids that do not divide the convolution grid") {
  // 3 cells onto 512: overlap integration must still conserve mass
  const auto law = StepDistribution::tabulated_density({0.5, 1.5, 1.0});
  const auto masses = law.cell_masses(512);
  double sum = 0.0;
  for (double m : masses) sum += m;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  // first third has density 0.5: mass of [0, 1/3) is 1/6
  double first_third = 0.0;
  for (int k = 0; k < 512; ++k)
    if ((k + 1) / 512.0 <= 1.0 / 3.0) first_third += masses[static_cast<std::size_t>(k)];
  CHECK(first_third == doctest::Approx(0.5 / 3.0).epsilon(1e-2));
  CHECK(nfold_cdf_deviation(law, 12, 512) < nfold_cdf_deviation(law, 2, 512));
}

TEST_CASE("zero-density cells are never sampled") {
  const auto law = StepDistribution::tabulated_density({0.0, 2.0});
  SplitStream stream(31, 0);
  for (int i = 0; i < 20000; ++i) {
    const double y = law.sample(stream).value();
    CHECK(y >= 0.5);
    CHECK(y < 1.0);
  }
  CHECK(law.cdf(0.49) == 0.0);
  CHECK(law.cdf(0.75) == doctest::Approx(0.5));
}

TEST_CASE("schatte_rate_fit recovers the geometric rate") {
  std::vector<std::int64_t> n_range;
  for (std::int64_t n = 2; n <= 20; ++n) n_range.push_back(n);

  const auto half = schatte_rate_fit(StepDistribution::uniform_interval(0.0, 0.5), n_range);
  CHECK_FALSE(half.degenerate);
  CHECK(half.fitted_omega > 0.55);
  CHECK(half.fitted_omega < 0.72);
  CHECK(half.fitted_c >= 0.0);

  const auto flat = schatte_rate_fit(StepDistribution::uniform_interval(0.0, 1.0), n_range);
  CHECK(flat.degenerate);

  const auto tri = schatte_rate_fit(triangle_density(), n_range);
  CHECK_FALSE(tri.degenerate);
  CHECK(tri.fitted_omega < 1.0);
  CHECK(tri.fitted_omega > 0.0);

  CHECK_THROWS_AS(schatte_rate_fit(StepDistribution::uniform_interval(0.0, 0.5), {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(schatte_rate_fit(StepDistribution::uniform_interval(0.0, 0.5), {3, 2, 4}),
                  std::invalid_argument);
}
