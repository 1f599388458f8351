// SPDX-License-Identifier: Apache-2.0
#include "ppc/config_io.hpp"

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ppc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for '" + key + "': " + s);
  }
  if (used != s.size()) throw ConfigError("config: bad number for '" + key + "': " + s);
  return v;
}

std::int64_t parse_int(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for '" + key + "': " + s);
  }
  if (used != s.size())
    throw ConfigError("config: bad integer for '" + key + "': " + s);
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: bad seed for '" + key + "': " + s);
  }
  if (used != s.size()) throw ConfigError("config: bad seed for '" + key + "': " + s);
  return v;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Config keys serialized for each generator kind, in emission order.
void emit_generator(std::ostream& out, const GeneratorSpec& gen) {
  out << "generator = " << gen.kind_name() << "\n";
  if (const auto* j = std::get_if<GeneratorSpec::JitteredSingle>(&gen.variant()))
    out << "m = " << j->cells << "\n";
  else if (const auto* b = std::get_if<GeneratorSpec::BatchJittered>(&gen.variant()))
    out << "m = " << b->cells << "\n";
  else if (const auto* w = std::get_if<GeneratorSpec::RandomWalk>(&gen.variant())) {
    out << "x1 = " << format_double(w->start) << "\n";
    out << "step = " << w->step.to_string() << "\n";
  } else if (const auto* k = std::get_if<GeneratorSpec::Kronecker>(&gen.variant())) {
    out << "x1 = " << format_double(k->start) << "\n";
    out << "c = " << format_double(k->step) << "\n";
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "schema_version = " << kConfigSchema << "\n";
  emit_generator(out, cfg.generator);
  out << "s_values = " << join_doubles(cfg.s_values) << "\n";
  out << "alpha_values = " << join_doubles(cfg.alpha_values) << "\n";
  out << "n_values = " << join_ints(cfg.n_values) << "\n";
  out << "replicates = " << cfg.replicates << "\n";
  out << "replicate_offset = " << cfg.replicate_offset << "\n";
  out << "master_seed = " << cfg.master_seed << "\n";
  return out.str();
}

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected 'key = value', got: " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'");
    kv[key] = value;
  }

  auto take = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("config: missing key '" + key + "'");
    const std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto take_optional = [&](const std::string& key, const std::string& fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const std::string v = it->second;
    kv.erase(it);
    return v;
  };

  const std::string schema = take("schema_version");
  if (schema != kConfigSchema)
    throw ConfigError("config: unsupported schema_version '" + schema + "'");

  const std::string kind = take("generator");
  GeneratorSpec::Variant variant = GeneratorSpec::IidUniform{};
  if (kind == "iid") {
    variant = GeneratorSpec::IidUniform{};
  } else if (kind == "jittered") {
    variant = GeneratorSpec::JitteredSingle{parse_int("m", take("m"))};
  } else if (kind == "batch") {
    variant = GeneratorSpec::BatchJittered{parse_int("m", take("m"))};
  } else if (kind == "sequential") {
    variant = GeneratorSpec::SequentialJittered{};
  } else if (kind == "walk") {
    const std::string x1 = take("x1");
    const std::string step = take("step");
    try {
      variant = GeneratorSpec::RandomWalk{parse_double("x1", x1),
                                          StepDistribution::parse(step)};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  } else if (kind == "kronecker") {
    variant = GeneratorSpec::Kronecker{parse_double("x1", take("x1")),
                                       parse_double("c", take("c"))};
  } else {
    throw ConfigError("config: unknown generator '" + kind + "'");
  }

  ExperimentConfig cfg{GeneratorSpec(std::move(variant), SeedSpec{}), {}, {}, {}, 1, 0, 0};
  for (const auto& tok : split(take("s_values"), ','))
    cfg.s_values.push_back(parse_double("s_values", tok));
  for (const auto& tok : split(take("alpha_values"), ','))
    cfg.alpha_values.push_back(parse_double("alpha_values", tok));
  for (const auto& tok : split(take("n_values"), ','))
    cfg.n_values.push_back(parse_int("n_values", tok));
  cfg.replicates = parse_int("replicates", take("replicates"));
  cfg.replicate_offset = parse_int("replicate_offset", take_optional("replicate_offset", "0"));
  cfg.master_seed = parse_uint("master_seed", take("master_seed"));
  cfg.generator.set_seed(SeedSpec{cfg.master_seed, 0});

  if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
  return cfg;
}

std::string serialize_result(const ExperimentResult& result) {
  std::ostringstream out;
  out << "schema_version = " << kResultSchema << "\n";
  out << "command = experiment\n";
  out << "# resolved config\n";
  {
    std::istringstream cfg(serialize_config(result.config));
    std::string line;
    while (std::getline(cfg, line)) {
      if (line.rfind("schema_version", 0) == 0) continue;  // result has its own
      out << line << "\n";
    }
  }
  out << "cells = " << result.cells.size() << "\n";
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const auto& cell = result.cells[i];
    const std::string p = "cell." + std::to_string(i) + ".";
    out << p << "s = " << format_double(cell.s) << "\n";
    out << p << "alpha = " << format_double(cell.alpha) << "\n";
    out << p << "n = " << cell.n << "\n";
    out << p << "replicates = " << cell.replicates << "\n";
    out << p << "mean_r = " << format_double(cell.mean_r) << "\n";
    out << p << "var_r = " << format_double(cell.var_r) << "\n";
    out << p << "stderr = " << format_double(cell.stderr_r) << "\n";
    out << p << "min_r = " << format_double(cell.min_r) << "\n";
    out << p << "max_r = " << format_double(cell.max_r) << "\n";
    out << p << "r_values = " << join_doubles(cell.replicate_r) << "\n";
  }
  return out.str();
}

void write_points_file(std::ostream& out, const PointSet& points,
                       const std::vector<std::pair<std::string, std::string>>& header) {
  out << "# schema_version = " << kPointsSchema << "\n";
  for (const auto& [key, value] : header) out << "# " << key << " = " << value << "\n";
  for (double x : points) out << format_double(x) << "\n";
}

PointSet read_points_file(std::istream& in) {
  std::vector<double> xs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(stripped, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("points file: bad value at line " + std::to_string(lineno));
    }
    if (used != stripped.size())
      throw std::runtime_error("points file: bad value at line " + std::to_string(lineno));
    xs.push_back(v);
  }
  return PointSet(std::move(xs));
}

void write_csv_header(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& fields) {
  out << "# schema_version = " << kCsvSchema << "\n";
  out << "# command = " << command << "\n";
  for (const auto& [key, value] : fields) out << "# " << key << " = " << value << "\n";
}

}  // namespace ppc
