// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppc/config_io.hpp"
#include "ppc/discrepancy.hpp"
#include "ppc/experiments.hpp"
#include "ppc/generators.hpp"
#include "ppc/paircorr.hpp"
#include "ppc/presets.hpp"
#include "ppc/spectral.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::array_t<double> to_array(const ppc::PointSet& points) {
  return py::array_t<double>(static_cast<py::ssize_t>(points.size()),
                             points.values().data());
}

ppc::PointSet to_points(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 1) throw py::value_error("points must be a 1-D array");
  const auto view = arr.unchecked<1>();
  std::vector<double> xs(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) xs[static_cast<std::size_t>(i)] = view(i);
  return ppc::PointSet(std::move(xs));
}

py::dict cell_to_dict(const ppc::ExperimentCell& cell) {
  py::dict d;
  d["s"] = cell.s;
  d["alpha"] = cell.alpha;
  d["n"] = cell.n;
  d["replicates"] = cell.replicates;
  d["mean_r"] = cell.mean_r;
  d["var_r"] = cell.var_r;
  d["stderr"] = cell.stderr_r;
  d["min_r"] = cell.min_r;
  d["max_r"] = cell.max_r;
  d["r_values"] = cell.replicate_r;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "torus point sequences, pair correlations, discrepancy, spectra";

  m.def("frac", [](double x) { return ppc::frac(x).value(); }, "x"_a,
        "Fractional part, wrapped into [0,1).");
  m.def("torus_dist", &ppc::torus_dist, "x"_a, "y"_a,
        "Distance to the nearest integer of x - y (at most 1/2).");
  m.def("box_count", &ppc::box_count, "x"_a, "level"_a, "radius"_a,
        "Dyadic grid points of level `level` in the open window around x.");

  py::class_<ppc::StepDistribution>(m, "StepDistribution")
      .def_static("uniform_interval", &ppc::StepDistribution::uniform_interval, "a"_a,
                  "b"_a)
      .def_static("two_point", &ppc::StepDistribution::two_point, "atom1"_a, "atom2"_a,
                  "p"_a)
      .def_static("constant", &ppc::StepDistribution::constant, "c"_a)
      .def_static("tabulated_density", &ppc::StepDistribution::tabulated_density,
                  "values"_a)
      .def_static("parse", &ppc::StepDistribution::parse, "spec"_a)
      .def("has_density", &ppc::StepDistribution::has_density)
      .def("cdf", &ppc::StepDistribution::cdf, "x"_a)
      .def("__repr__", [](const ppc::StepDistribution& s) {
        return "StepDistribution('" + s.to_string() + "')";
      })
      .def("__str__", &ppc::StepDistribution::to_string);

  m.def("triangle_density", &ppc::triangle_density, "cells"_a = 64);
  m.def("golden_ratio_step", &ppc::golden_ratio_step);

  m.def(
      "iid_uniform",
      [](std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
        return to_array(ppc::gen_iid_uniform(n, ppc::SeedSpec{seed, stream}));
      },
      "n"_a, "seed"_a = 0, "stream"_a = 0);
  m.def(
      "jittered_single",
      [](std::int64_t m_, std::uint64_t seed, std::uint64_t stream) {
        return to_array(ppc::gen_jittered_single(m_, ppc::SeedSpec{seed, stream}));
      },
      "m"_a, "seed"_a = 0, "stream"_a = 0);
  m.def(
      "batch_jittered",
      [](std::int64_t m_, std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
        return to_array(ppc::gen_batch_jittered(m_, n, ppc::SeedSpec{seed, stream}));
      },
      "m"_a, "n"_a, "seed"_a = 0, "stream"_a = 0);
  m.def(
      "sequential_jittered",
      [](std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
        return to_array(ppc::gen_sequential_jittered(n, ppc::SeedSpec{seed, stream}));
      },
      "n"_a, "seed"_a = 0, "stream"_a = 0);
  m.def(
      "random_walk",
      [](std::int64_t n, double x1, const ppc::StepDistribution& step,
         std::uint64_t seed, std::uint64_t stream) {
        return to_array(ppc::gen_random_walk(n, x1, step, ppc::SeedSpec{seed, stream}));
      },
      "n"_a, "x1"_a, "step"_a, "seed"_a = 0, "stream"_a = 0);
  m.def(
      "kronecker",
      [](std::int64_t n, double x1, double c) {
        return to_array(ppc::gen_kronecker(n, x1, c));
      },
      "n"_a, "x1"_a, "c"_a);

  m.def(
      "pair_count_naive",
      [](const py::array_t<double>& pts, double radius) {
        return ppc::pair_count_naive(to_points(pts), radius);
      },
      "points"_a, "radius"_a);
  m.def(
      "pair_count_fast",
      [](const py::array_t<double>& pts, double radius) {
        return ppc::pair_count_fast(to_points(pts), radius);
      },
      "points"_a, "radius"_a);
  m.def(
      "r_statistic",
      [](const py::array_t<double>& pts, double s, double alpha) {
        const auto r = ppc::r_statistic(to_points(pts), ppc::PairCorrParams(s, alpha));
        py::dict d;
        d["pair_count"] = r.pair_count;
        d["value"] = r.value;
        d["n"] = r.n;
        d["s"] = r.params.s;
        d["alpha"] = r.params.alpha;
        return d;
      },
      "points"_a, "s"_a, "alpha"_a = 1.0);
  m.def(
      "neighbor_count",
      [](const py::array_t<double>& pts, std::int64_t index, double s, double alpha) {
        return ppc::neighbor_count(to_points(pts), index, ppc::PairCorrParams(s, alpha));
      },
      "points"_a, "index"_a, "s"_a, "alpha"_a = 1.0);
  m.def(
      "circular_gaps",
      [](const py::array_t<double>& pts) {
        const auto gaps = ppc::circular_gaps(to_points(pts));
        return py::array_t<double>(static_cast<py::ssize_t>(gaps.size()), gaps.data());
      },
      "points"_a);
  m.def(
      "gap_histogram",
      [](const py::array_t<double>& pts, std::int64_t bins) {
        const auto h = ppc::gap_histogram(to_points(pts), bins);
        return py::make_tuple(h.counts, h.upper, h.n_gaps);
      },
      "points"_a, "bins"_a);

  m.def(
      "extreme_discrepancy",
      [](const py::array_t<double>& pts) {
        return ppc::extreme_discrepancy(to_points(pts)).value;
      },
      "points"_a);
  m.def(
      "discrepancy_bruteforce",
      [](const py::array_t<double>& pts) {
        return ppc::discrepancy_bruteforce(to_points(pts)).value;
      },
      "points"_a);

  m.def(
      "fourier_coeff",
      [](const ppc::StepDistribution& step, std::int64_t r) {
        return ppc::fourier_coeff(step, r).value;
      },
      "step"_a, "r"_a);
  m.def("sup_fourier", &ppc::sup_fourier, "step"_a, "r_max"_a = 64);
  m.def("nfold_cdf_deviation", &ppc::nfold_cdf_deviation, "step"_a, "n"_a,
        "grid"_a = 1 << 14);
  m.def(
      "schatte_rate_fit",
      [](const ppc::StepDistribution& step, const std::vector<std::int64_t>& n_range,
         std::int64_t grid) {
        const auto p = ppc::schatte_rate_fit(step, n_range, grid);
        py::dict d;
        d["n_values"] = p.n_values;
        d["sup_devs"] = p.sup_devs;
        d["fitted_omega"] = p.fitted_omega;
        d["fitted_c"] = p.fitted_c;
        d["degenerate"] = p.degenerate;
        return d;
      },
      "step"_a, "n_range"_a, "grid"_a = 1 << 14);

  m.def("adjacent_pair_probability", &ppc::adjacent_pair_probability, "n"_a,
        "replicates"_a, "seed"_a, "radius"_a = std::nullopt);
  m.def(
      "run_experiment",
      [](const std::string& config_text) {
        const auto cfg = ppc::parse_config(config_text);
        const auto result = ppc::estimate_moments(cfg);
        py::dict d;
        d["config"] = ppc::serialize_config(result.config);
        d["document"] = ppc::serialize_result(result);
        py::list cells;
        for (const auto& cell : result.cells) cells.append(cell_to_dict(cell));
        d["cells"] = cells;
        return d;
      },
      "config_text"_a, "Run an experiment from flat key-value config text.");
  m.def(
      "theorem_preset",
      [](const std::string& id) {
        const auto preset = ppc::theorem_preset(id);
        py::list configs;
        for (const auto& cfg : preset.configs) configs.append(ppc::serialize_config(cfg));
        return configs;
      },
      "id"_a, "Config texts of a canned sweep.");
  m.def("preset_ids", &ppc::preset_ids);
}
