// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ppc/discrepancy.hpp"
#include "ppc/generators.hpp"
#include "ppc/presets.hpp"
#include "ppc/rng.hpp"

using namespace ppc;

namespace {

PointSet lattice(std::int64_t n) {
  std::vector<double> xs;
  for (std::int64_t k = 0; k < n; ++k)
    xs.push_back(static_cast<double>(k) / static_cast<double>(n));
  return PointSet::from_unit(std::move(xs));
}

PointSet midpoint_lattice(std::int64_t n) {
  std::vector<double> xs;
  for (std::int64_t k = 1; k <= n; ++k)
    xs.push_back(static_cast<double>(2 * k - 1) / static_cast<double>(2 * n));
  return PointSet::from_unit(std::move(xs));
}

}  // namespace

TEST_CASE("discrepancy oracle examples") {
  CHECK(discrepancy_bruteforce(PointSet(std::vector<double>{0.0})).value ==
        doctest::Approx(1.0));
  CHECK(discrepancy_bruteforce(PointSet(std::vector<double>{0.5})).value ==
        doctest::Approx(1.0));
  CHECK(discrepancy_bruteforce(PointSet(std::vector<double>{0.0, 0.5})).value ==
        doctest::Approx(0.5));
  CHECK(discrepancy_bruteforce(lattice(10)).value == doctest::Approx(0.1));
  // the midpoint lattice also attains 1/N: a vanishing interval around any
  // point gives count 1 over length 0 in the sup limit
  CHECK(discrepancy_bruteforce(midpoint_lattice(10)).value == doctest::Approx(0.1));
}

TEST_CASE("sorted-sample formula matches the oracle examples") {
  CHECK(extreme_discrepancy(PointSet(std::vector<double>{0.0})).value ==
        doctest::Approx(1.0));
  CHECK(extreme_discrepancy(PointSet(std::vector<double>{0.5})).value ==
        doctest::Approx(1.0));
  CHECK(extreme_discrepancy(PointSet(std::vector<double>{0.0, 0.5})).value ==
        doctest::Approx(0.5));
  CHECK(extreme_discrepancy(lattice(10)).value == doctest::Approx(0.1));
  CHECK(extreme_discrepancy(midpoint_lattice(10)).value == doctest::Approx(0.1));
}

TEST_CASE("formula matches the oracle on random instances") {
  SplitStream stream(707, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = 1 + static_cast<std::int64_t>(stream.next_below(256));
    std::vector<double> xs;
    const auto flavor = stream.next_below(3);
    for (std::int64_t i = 0; i < n; ++i) {
      if (flavor == 0)
        xs.push_back(stream.next_unit());
      else if (flavor == 1)
        xs.push_back(static_cast<double>(stream.next_below(32)) / 32.0);
      else
        xs.push_back(frac(0.9 + 0.2 * stream.next_unit()).value());
    }
    const PointSet points(std::move(xs));
    const double fast = extreme_discrepancy(points).value;
    const double slow = discrepancy_bruteforce(points).value;
    CHECK(std::fabs(fast - slow) <= 1e-12);
  }
}

TEST_CASE("bounds and input validation") {
  SplitStream stream(808, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + static_cast<std::int64_t>(stream.next_below(64));
    std::vector<double> xs;
    for (std::int64_t i = 0; i < n; ++i) xs.push_back(stream.next_unit());
    const auto result = extreme_discrepancy(PointSet(std::move(xs)));
    CHECK(result.value >= 1.0 / static_cast<double>(n) - 1e-15);
    CHECK(result.value <= 1.0 + 1e-15);
  }
  CHECK_THROWS_AS(extreme_discrepancy(PointSet{}), std::invalid_argument);
  CHECK_THROWS_AS(discrepancy_bruteforce(PointSet{}), std::invalid_argument);
  CHECK_THROWS_AS(discrepancy_bruteforce(gen_iid_uniform(5000, SeedSpec{})),
                  std::invalid_argument);
}

TEST_CASE("golden-ratio Kronecker is low discrepancy") {
  const double c = golden_ratio_step();
  const PointSet points = gen_kronecker(1 << 16, 0.0, c);
  for (int k = 8; k <= 16; ++k) {
    const std::int64_t n = std::int64_t{1} << k;
    const double dn = extreme_discrepancy(points.prefix(static_cast<std::size_t>(n))).value;
    CHECK(static_cast<double>(n) * dn / std::log(static_cast<double>(n)) < 3.0);
  }
}

TEST_CASE("iid discrepancy at scale is small") {
  const PointSet points = gen_iid_uniform(100000, SeedSpec{999, 0});
  CHECK(extreme_discrepancy(points).value < 0.02);
}
