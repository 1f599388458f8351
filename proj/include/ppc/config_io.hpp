// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppc/experiments.hpp"

namespace ppc {

// Malformed config text / flags; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kConfigSchema = "ppc.config/1";
inline constexpr const char* kResultSchema = "ppc.result/1";
inline constexpr const char* kPointsSchema = "ppc.points/1";
inline constexpr const char* kCsvSchema = "ppc.csv/1";

// 17 significant digits: enough for doubles to round-trip bit-exactly.
std::string format_double(double v);

// Flat key-value text (one "key = value" per line, '#' comments). Emission
// order is fixed, so identical configs serialize to identical bytes.
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig parse_config(const std::string& text);

// Full-provenance result document: the resolved config echo plus one indexed
// block of statistics per cell, including the raw per-replicate values.
std::string serialize_result(const ExperimentResult& result);

// Points file: '#'-prefixed header holding the resolved generating config,
// then one decimal per line.
void write_points_file(std::ostream& out, const PointSet& points,
                       const std::vector<std::pair<std::string, std::string>>& header);
PointSet read_points_file(std::istream& in);

// '#'-prefixed provenance header for CSV outputs.
void write_csv_header(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& fields);

}  // namespace ppc
