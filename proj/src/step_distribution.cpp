// SPDX-License-Identifier: Apache-2.0
#include "ppc/step_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace ppc {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_num(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("step spec: bad number '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("step spec: bad number '" + s + "'");
  return v;
}

}  // namespace

StepDistribution StepDistribution::uniform_interval(double a, double b) {
  if (!(a >= 0.0 && a < b && b <= 1.0))
    throw std::invalid_argument("uniform_interval: need 0 <= a < b <= 1");
  return StepDistribution(Variant(UniformInterval{a, b}));
}

StepDistribution StepDistribution::two_point(double atom1, double atom2, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("two_point: p must lie in [0,1]");
  return StepDistribution(
      Variant(TwoPoint{frac(atom1).value(), frac(atom2).value(), p}));
}

StepDistribution StepDistribution::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("constant: step must be finite");
  return StepDistribution(Variant(Constant{c}));
}

StepDistribution StepDistribution::tabulated_density(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("tabulated_density: needs at least one cell");
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("tabulated_density: entries must be finite and >= 0");
    sum += v;
  }
  const double mean = sum / static_cast<double>(values.size());
  if (std::fabs(mean - 1.0) > 1e-9)
    throw std::invalid_argument("tabulated_density: entries must average to 1");
  StepDistribution d{Variant(Tabulated{std::move(values)})};
  const auto& vals = std::get<Tabulated>(d.variant_).values;
  d.cum_.resize(vals.size() + 1, 0.0);
  for (std::size_t k = 0; k < vals.size(); ++k)
    d.cum_[k + 1] = d.cum_[k] + vals[k] / static_cast<double>(vals.size());
  const double total = d.cum_.back();  // 1 within 1e-9; normalize exactly
  for (double& c : d.cum_) c /= total;
  d.cum_.back() = 1.0;
  return d;
}

bool StepDistribution::has_density() const noexcept {
  return std::holds_alternative<UniformInterval>(variant_) ||
         std::holds_alternative<Tabulated>(variant_);
}

TorusPoint StepDistribution::sample(SplitStream& stream) const {
  if (const auto* u = std::get_if<UniformInterval>(&variant_)) {
    return frac(u->a + (u->b - u->a) * stream.next_unit());
  }
  if (const auto* t = std::get_if<TwoPoint>(&variant_)) {
    return TorusPoint(stream.next_unit() < t->p ? t->atom1 : t->atom2);
  }
  if (const auto* c = std::get_if<Constant>(&variant_)) {
    return frac(c->c);
  }
  const auto& tab = std::get<Tabulated>(variant_);
  const double u = stream.next_unit();
  // cell k with cum_[k] <= u < cum_[k+1]; such a cell has positive mass
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  const auto k = static_cast<std::size_t>(it - cum_.begin()) - 1;
  const double mass = cum_[k + 1] - cum_[k];
  const double within = (u - cum_[k]) / mass;  // uniform in the cell
  const auto cells = static_cast<double>(tab.values.size());
  return frac((static_cast<double>(k) + within) / cells);
}

double StepDistribution::cdf(double x) const {
  if (x < 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (const auto* u = std::get_if<UniformInterval>(&variant_)) {
    if (x <= u->a) return 0.0;
    if (x >= u->b) return 1.0;
    return (x - u->a) / (u->b - u->a);
  }
  if (const auto* t = std::get_if<TwoPoint>(&variant_)) {
    double f = 0.0;
    if (x >= t->atom1) f += t->p;
    if (x >= t->atom2) f += 1.0 - t->p;
    return f;
  }
  if (const auto* c = std::get_if<Constant>(&variant_)) {
    return x >= frac(c->c).value() ? 1.0 : 0.0;
  }
  const auto& tab = std::get<Tabulated>(variant_);
  const auto cells = static_cast<double>(tab.values.size());
  auto k = static_cast<std::size_t>(x * cells);
  if (k >= tab.values.size()) k = tab.values.size() - 1;
  const double mass = cum_[k + 1] - cum_[k];
  return cum_[k] + mass * (x * cells - static_cast<double>(k));
}

std::vector<double> StepDistribution::cell_masses(std::int64_t grid) const {
  if (grid < 1) throw std::invalid_argument("cell_masses: grid must be positive");
  if (!has_density())
    throw std::invalid_argument("cell_masses: step law has no Lebesgue density");
  std::vector<double> masses(static_cast<std::size_t>(grid), 0.0);
  const double g = static_cast<double>(grid);
  if (const auto* u = std::get_if<UniformInterval>(&variant_)) {
    for (std::int64_t k = 0; k < grid; ++k) {
      const double lo = static_cast<double>(k) / g;
      const double hi = static_cast<double>(k + 1) / g;
      const double overlap = std::min(u->b, hi) - std::max(u->a, lo);
      if (overlap > 0.0) masses[static_cast<std::size_t>(k)] = overlap / (u->b - u->a);
    }
  } else {
    const auto& tab = std::get<Tabulated>(variant_);
    const auto cells = static_cast<std::int64_t>(tab.values.size());
    const double kc = static_cast<double>(cells);
    for (std::int64_t k = 0; k < grid; ++k) {
      const double lo = static_cast<double>(k) / g;
      const double hi = static_cast<double>(k + 1) / g;
      // integrate the staircase density over [lo, hi)
      const auto j0 = std::min<std::int64_t>(static_cast<std::int64_t>(lo * kc), cells - 1);
      const auto j1 = std::min<std::int64_t>(static_cast<std::int64_t>(hi * kc), cells - 1);
      double acc = 0.0;
      for (std::int64_t j = j0; j <= j1; ++j) {
        const double cl = static_cast<double>(j) / kc;
        const double ch = static_cast<double>(j + 1) / kc;
        const double overlap = std::min(hi, ch) - std::max(lo, cl);
        if (overlap > 0.0) acc += overlap * tab.values[static_cast<std::size_t>(j)];
      }
      masses[static_cast<std::size_t>(k)] = acc;
    }
  }
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  return masses;
}

std::string StepDistribution::to_string() const {
  if (const auto* u = std::get_if<UniformInterval>(&variant_))
    return "uniform:" + fmt(u->a) + ":" + fmt(u->b);
  if (const auto* t = std::get_if<TwoPoint>(&variant_))
    return "two_point:" + fmt(t->atom1) + ":" + fmt(t->atom2) + ":" + fmt(t->p);
  if (const auto* c = std::get_if<Constant>(&variant_)) return "constant:" + fmt(c->c);
  const auto& tab = std::get<Tabulated>(variant_);
  std::string out = "tabulated:";
  for (std::size_t k = 0; k < tab.values.size(); ++k) {
    if (k) out += ',';
    out += fmt(tab.values[k]);
  }
  return out;
}

StepDistribution StepDistribution::parse(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "uniform") {
    if (parts.size() != 3) throw std::invalid_argument("step spec: uniform:a:b");
    return uniform_interval(parse_num(parts[1]), parse_num(parts[2]));
  }
  if (kind == "two_point") {
    if (parts.size() != 4) throw std::invalid_argument("step spec: two_point:x:y:p");
    return two_point(parse_num(parts[1]), parse_num(parts[2]), parse_num(parts[3]));
  }
  if (kind == "constant") {
    if (parts.size() != 2) throw std::invalid_argument("step spec: constant:c");
    return constant(parse_num(parts[1]));
  }
  if (kind == "tabulated") {
    if (parts.size() != 2) throw std::invalid_argument("step spec: tabulated:v1,v2,...");
    std::vector<double> values;
    for (const auto& tok : split(parts[1], ',')) values.push_back(parse_num(tok));
    return tabulated_density(std::move(values));
  }
  throw std::invalid_argument("step spec: unknown kind '" + kind + "'");
}

}  // namespace ppc
