// SPDX-License-Identifier: Apache-2.0
//
// ppc: generate torus point sequences, compute pair-correlation and
// discrepancy statistics, inspect step-law spectra, and run seeded Monte
// Carlo experiments.
//
// Exit codes: 0 success, 1 runtime/domain error, 2 usage/config error,
// 3 acceptance-band failure under `experiment --check`.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ppc/config_io.hpp"
#include "ppc/discrepancy.hpp"
#include "ppc/generators.hpp"
#include "ppc/paircorr.hpp"
#include "ppc/presets.hpp"
#include "ppc/spectral.hpp"

namespace {

using namespace ppc;

struct GenFlags {
  std::string gen;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::int64_t m = 0;
  double x1 = 0.0;
  double c = 0.0;
  std::string step;
};

void add_gen_options(CLI::App* cmd, GenFlags& flags, bool require_gen) {
  auto* gen = cmd->add_option("--gen", flags.gen, "generator kind")
                  ->check(CLI::IsMember(
                      {"iid", "jittered", "batch", "sequential", "walk", "kronecker"}));
  if (require_gen) gen->required();
  cmd->add_option("--n", flags.n, "number of points");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--stream", flags.stream, "stream index (default 0)");
  cmd->add_option("--m", flags.m, "cells per (batch) jittered sample");
  cmd->add_option("--x1", flags.x1, "start point for walk/kronecker");
  cmd->add_option("--c", flags.c, "kronecker step");
  cmd->add_option("--step", flags.step,
                  "walk step law: uniform:a:b | two_point:x:y:p | constant:c | "
                  "tabulated:v1,v2,...");
}

GeneratorSpec build_spec(const GenFlags& flags) {
  const SeedSpec seed{flags.seed, flags.stream};
  if (flags.gen == "iid") return GeneratorSpec(GeneratorSpec::IidUniform{}, seed);
  if (flags.gen == "jittered") {
    if (flags.m < 1) throw ConfigError("--gen jittered requires --m >= 1");
    return GeneratorSpec(GeneratorSpec::JitteredSingle{flags.m}, seed);
  }
  if (flags.gen == "batch") {
    if (flags.m < 1) throw ConfigError("--gen batch requires --m >= 1");
    return GeneratorSpec(GeneratorSpec::BatchJittered{flags.m}, seed);
  }
  if (flags.gen == "sequential")
    return GeneratorSpec(GeneratorSpec::SequentialJittered{}, seed);
  if (flags.gen == "walk") {
    if (flags.step.empty()) throw ConfigError("--gen walk requires --step");
    try {
      return GeneratorSpec(
          GeneratorSpec::RandomWalk{flags.x1, StepDistribution::parse(flags.step)}, seed);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  // kronecker
  return GeneratorSpec(GeneratorSpec::Kronecker{flags.x1, flags.c}, seed);
}

std::int64_t resolve_count(const GenFlags& flags) {
  if (flags.gen == "jittered") {
    if (flags.n != 0 && flags.n != flags.m)
      throw ConfigError("--gen jittered: --n must equal --m when given");
    return flags.m;
  }
  if (flags.n < 1) throw ConfigError("--n is required and must be >= 1");
  return flags.n;
}

std::vector<std::pair<std::string, std::string>> gen_header(const GeneratorSpec& spec,
                                                            std::int64_t n) {
  std::vector<std::pair<std::string, std::string>> header;
  header.emplace_back("generator", spec.kind_name());
  if (const auto* j = std::get_if<GeneratorSpec::JitteredSingle>(&spec.variant()))
    header.emplace_back("m", std::to_string(j->cells));
  else if (const auto* b = std::get_if<GeneratorSpec::BatchJittered>(&spec.variant()))
    header.emplace_back("m", std::to_string(b->cells));
  else if (const auto* w = std::get_if<GeneratorSpec::RandomWalk>(&spec.variant())) {
    header.emplace_back("x1", format_double(w->start));
    header.emplace_back("step", w->step.to_string());
  } else if (const auto* k = std::get_if<GeneratorSpec::Kronecker>(&spec.variant())) {
    header.emplace_back("x1", format_double(k->start));
    header.emplace_back("c", format_double(k->step));
  }
  header.emplace_back("n", std::to_string(n));
  header.emplace_back("master_seed", std::to_string(spec.seed().master_seed));
  header.emplace_back("stream_index", std::to_string(spec.seed().stream_index));
  return header;
}

// Writes to the path, or stdout for "-".
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points file: " + path);
  return read_points_file(in);
}

int run_generate(const GenFlags& flags, const std::string& out_path) {
  const GeneratorSpec spec = build_spec(flags);
  const std::int64_t n = resolve_count(flags);
  const PointSet points = spec.generate(n);
  OutputTarget out(out_path);
  write_points_file(out.stream(), points, gen_header(spec, n));
  return 0;
}

int run_ppc(const GenFlags& flags, const std::string& points_path,
            const std::vector<double>& s_values, const std::vector<double>& alpha_values,
            const std::vector<std::int64_t>& prefix_scan, const std::string& out_path) {
  PointSet points;
  std::vector<std::pair<std::string, std::string>> provenance;
  if (!points_path.empty() && !flags.gen.empty())
    throw ConfigError("ppc takes --points or --gen, not both");
  if (!points_path.empty()) {
    points = load_points(points_path);
    provenance.emplace_back("points", points_path);
  } else {
    if (flags.gen.empty()) throw ConfigError("ppc needs --points or --gen");
    const GeneratorSpec spec = build_spec(flags);
    const std::int64_t n = resolve_count(flags);
    points = spec.generate(n);
    provenance = gen_header(spec, n);
  }
  std::vector<std::int64_t> ns = prefix_scan;
  if (ns.empty()) ns.push_back(static_cast<std::int64_t>(points.size()));

  OutputTarget out(out_path);
  write_csv_header(out.stream(), "ppc", provenance);
  out.stream() << "n,s,alpha,pair_count,r\n";
  for (const std::int64_t n : ns) {
    if (n < 2 || n > static_cast<std::int64_t>(points.size()))
      throw std::runtime_error("ppc: prefix length " + std::to_string(n) +
                               " outside [2, " + std::to_string(points.size()) + "]");
    const PointSet prefix = points.prefix(static_cast<std::size_t>(n));
    for (const double s : s_values) {
      for (const double alpha : alpha_values) {
        const auto result = r_statistic(prefix, PairCorrParams(s, alpha));
        out.stream() << n << ',' << format_double(s) << ',' << format_double(alpha)
                     << ',' << result.pair_count << ',' << format_double(result.value)
                     << "\n";
      }
    }
  }
  return 0;
}

int run_discrepancy(const std::string& points_path, const std::string& out_path) {
  const PointSet points = load_points(points_path);
  const auto result = extreme_discrepancy(points);
  OutputTarget out(out_path);
  write_csv_header(out.stream(), "discrepancy", {{"points", points_path}});
  out.stream() << "n,d_n\n";
  out.stream() << result.n << ',' << format_double(result.value) << "\n";
  return 0;
}

int run_spectral(const std::string& step_spec, std::int64_t rmax,
                 const std::vector<std::int64_t>& profile, std::int64_t grid,
                 const std::string& out_path) {
  StepDistribution step = StepDistribution::uniform_interval(0.0, 1.0);
  try {
    step = StepDistribution::parse(step_spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!profile.empty() && !step.has_density())
    throw std::runtime_error(
        "spectral --profile requires a step law with a Lebesgue density "
        "(uniform or tabulated); the n-fold CDF bound needs the density hypothesis");

  OutputTarget out(out_path);
  write_csv_header(out.stream(), "spectral",
                   {{"step", step.to_string()},
                    {"rmax", std::to_string(rmax)},
                    {"grid", std::to_string(grid)}});
  out.stream() << "row_type,index,value\n";
  for (std::int64_t r = 1; r <= rmax; ++r)
    out.stream() << "coeff," << r << ','
                 << format_double(std::abs(fourier_coeff(step, r).value)) << "\n";
  for (const std::int64_t n : profile)
    out.stream() << "profile," << n << ','
                 << format_double(nfold_cdf_deviation(step, n, grid)) << "\n";
  return 0;
}

int run_experiment(const std::string& config_path, const std::string& preset_id,
                   const std::string& out_prefix, bool check) {
  std::vector<ExperimentConfig> configs;
  std::optional<ThmPreset> preset;
  if (!preset_id.empty()) {
    try {
      preset = theorem_preset(preset_id);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    configs = preset->configs;
  } else {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path);
    std::ostringstream text;
    text << in.rdbuf();
    configs.push_back(parse_config(text.str()));
  }

  std::vector<ExperimentResult> results;
  results.reserve(configs.size());
  for (const auto& cfg : configs) results.push_back(estimate_moments(cfg));

  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::string path = results.size() == 1
                                 ? out_prefix + ".result.txt"
                                 : out_prefix + ".cfg" + std::to_string(i) + ".result.txt";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << serialize_result(results[i]);
  }
  {
    const std::string path = out_prefix + ".summary.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_csv_header(out, "experiment",
                     {{"source", preset_id.empty() ? config_path : preset_id}});
    out << "generator,master_seed,s,alpha,n,replicates,mean_r,var_r,stderr,min_r,max_r\n";
    for (const auto& result : results) {
      for (const auto& cell : result.cells) {
        out << result.config.generator.describe() << ',' << result.config.master_seed
            << ',' << format_double(cell.s) << ',' << format_double(cell.alpha) << ','
            << cell.n << ',' << cell.replicates << ',' << format_double(cell.mean_r)
            << ',' << format_double(cell.var_r) << ',' << format_double(cell.stderr_r)
            << ',' << format_double(cell.min_r) << ',' << format_double(cell.max_r)
            << "\n";
      }
    }
  }

  if (check) {
    if (!preset) throw ConfigError("--check needs --preset (configs carry no bands)");
    bool all_pass = true;
    for (const auto& line : check_preset(*preset, results)) {
      std::cout << (line.pass ? "PASS " : "FAIL ") << line.label << ": " << line.detail
                << "\n";
      all_pass = all_pass && line.pass;
    }
    if (!all_pass) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torus point sequences, pair correlations, and experiments"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string out_path = "-";
  auto* generate = app.add_subcommand("generate", "write a generated point sequence");
  add_gen_options(generate, gen_flags, /*require_gen=*/true);
  generate->add_option("--out", out_path, "output file ('-' = stdout)");

  GenFlags ppc_gen_flags;
  std::string ppc_points, ppc_out = "-";
  std::vector<double> s_values, alpha_values{1.0};
  std::vector<std::int64_t> prefix_scan;
  auto* ppc_cmd = app.add_subcommand("ppc", "pair-correlation statistic R_alpha(s,N)");
  ppc_cmd->add_option("--points", ppc_points, "input points file");
  add_gen_options(ppc_cmd, ppc_gen_flags, /*require_gen=*/false);
  ppc_cmd->add_option("--s", s_values, "window scale list")->required()->delimiter(',');
  ppc_cmd->add_option("--alpha", alpha_values, "exponent list (default 1)")->delimiter(',');
  ppc_cmd->add_option("--prefix-scan", prefix_scan, "evaluate R on these prefix lengths")->delimiter(',');
  ppc_cmd->add_option("--out", ppc_out, "output file ('-' = stdout)");

  std::string disc_points, disc_out = "-";
  auto* disc = app.add_subcommand("discrepancy", "extreme discrepancy D_N");
  disc->add_option("--points", disc_points, "input points file")->required();
  disc->add_option("--out", disc_out, "output file ('-' = stdout)");

  std::string spec_step, spec_out = "-";
  std::int64_t rmax = 64, grid = 1 << 14;
  std::vector<std::int64_t> profile;
  auto* spectral = app.add_subcommand("spectral", "Fourier coefficients and n-fold CDF profile");
  spectral->add_option("--step", spec_step, "step law spec")->required();
  spectral->add_option("--rmax", rmax, "largest coefficient index (default 64)");
  spectral->add_option("--profile", profile, "fold counts for the CDF deviation profile")->delimiter(',');
  spectral->add_option("--grid", grid, "convolution grid, power of two (default 16384)");
  spectral->add_option("--out", spec_out, "output file ('-' = stdout)");

  std::string exp_config, exp_preset, exp_out = "ppc_experiment";
  bool exp_check = false;
  auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo sweep");
  experiment->add_option("--config", exp_config, "experiment config file");
  experiment->add_option("--preset", exp_preset, "canned sweep id (see docs)");
  experiment->add_option("--out", exp_out, "output prefix (default ppc_experiment)");
  experiment->add_flag("--check", exp_check, "verify the preset's acceptance bands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return run_generate(gen_flags, out_path);
    if (ppc_cmd->parsed())
      return run_ppc(ppc_gen_flags, ppc_points, s_values, alpha_values, prefix_scan,
                     ppc_out);
    if (disc->parsed()) return run_discrepancy(disc_points, disc_out);
    if (spectral->parsed()) return run_spectral(spec_step, rmax, profile, grid, spec_out);
    if (experiment->parsed()) {
      if (exp_config.empty() == exp_preset.empty())
        throw ppc::ConfigError("experiment needs exactly one of --config / --preset");
      return run_experiment(exp_config, exp_preset, exp_out, exp_check);
    }
  } catch (const ppc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
