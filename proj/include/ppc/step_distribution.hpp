// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ppc/rng.hpp"
#include "ppc/torus.hpp"

namespace ppc {

// Step law of the random walk on the torus. Four families:
//   uniform_interval(a,b)      density 1/(b-a) on [a,b), 0 <= a < b <= 1
//   two_point(x,y,p)           P(Y=x)=p, P(Y=y)=1-p
//   constant(c)                P(Y={c})=1
//   tabulated_density(values)  piecewise-constant density on a uniform grid;
//                              entries >= 0 with mean 1 (integrates to 1)
class StepDistribution {
 public:
  struct UniformInterval {
    double a, b;
  };
  struct TwoPoint {
    double atom1, atom2, p;
  };
  struct Constant {
    double c;
  };
  struct Tabulated {
    std::vector<double> values;  // density values, mean 1 within 1e-9
  };
  using Variant = std::variant<UniformInterval, TwoPoint, Constant, Tabulated>;

  static StepDistribution uniform_interval(double a, double b);
  static StepDistribution two_point(double atom1, double atom2, double p);
  static StepDistribution constant(double c);
  static StepDistribution tabulated_density(std::vector<double> values);

  const Variant& variant() const noexcept { return variant_; }

  // True for the families with a Lebesgue density (uniform_interval,
  // tabulated_density).
  bool has_density() const noexcept;

  // One draw with this law.
  TorusPoint sample(SplitStream& stream) const;

  // Distribution function P(Y <= x) for x in [0,1).
  double cdf(double x) const;

  // Probability masses of the density on `grid` equal cells of [0,1),
  // integrated exactly over each cell and normalized to sum 1. Only valid
  // for density variants.
  std::vector<double> cell_masses(std::int64_t grid) const;

  // "uniform:a:b" | "two_point:x:y:p" | "constant:c" | "tabulated:v1,v2,..."
  std::string to_string() const;
  static StepDistribution parse(const std::string& spec);

 private:
  explicit StepDistribution(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
  // Cumulative cell masses for inverse-CDF sampling (tabulated only).
  std::vector<double> cum_;
};

}  // namespace ppc
