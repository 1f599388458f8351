// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ppc/config_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "ppc_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(PPC_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(out), slurp(err)};
}

std::vector<double> read_points(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    values.push_back(std::stod(line));
  }
  return values;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("generate kronecker produces the mod-1 multiples") {
  const fs::path file = scratch_dir() / "kron.txt";
  const auto result =
      run_cli("generate --gen kronecker --c 0.6180339887 --x1 0 --n 4 --out " + file.string());
  REQUIRE(result.exit_code == 0);
  const auto values = read_points(file);
  REQUIRE(values.size() == 4);
  const double c = 0.6180339887;
  for (int k = 0; k < 4; ++k) {
    const double expected = (0.0 + k * c) - std::floor(0.0 + k * c);
    CHECK(values[static_cast<std::size_t>(k)] == expected);
  }
}

TEST_CASE("generate is byte-deterministic") {
  const fs::path a = scratch_dir() / "seq_a.txt";
  const fs::path b = scratch_dir() / "seq_b.txt";
  REQUIRE(run_cli("generate --gen sequential --n 8 --seed 7 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("generate --gen sequential --n 8 --seed 7 --out " + b.string()).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("generate two-point walk stays on the atoms") {
  const fs::path file = scratch_dir() / "walk.txt";
  const auto result = run_cli(
      "generate --gen walk --step two_point:0:0.5:0.5 --x1 0 --n 100 --out " + file.string());
  REQUIRE(result.exit_code == 0);
  for (double v : read_points(file)) CHECK((v == 0.0 || v == 0.5));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("generate --gen nope --n 4").exit_code == 2);
  CHECK(run_cli("generate --gen iid").exit_code == 2);       // missing --n
  CHECK(run_cli("generate --gen walk --n 4").exit_code == 2);  // missing --step
  CHECK(run_cli("generate --gen jittered --m 8 --n 9").exit_code == 2);
  CHECK(run_cli("bogus_command").exit_code == 2);
  CHECK(run_cli("experiment").exit_code == 2);               // config xor preset
  CHECK(run_cli("experiment --preset nope").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);

  const fs::path jit = scratch_dir() / "jit.txt";
  CHECK(run_cli("generate --gen jittered --m 8 --out " + jit.string()).exit_code == 0);
  CHECK(read_points(jit).size() == 8);
}

TEST_CASE("ppc command matches the worked examples") {
  const fs::path points = scratch_dir() / "quarters.txt";
  write_file(points, "0\n0.25\n0.5\n0.75\n");

  auto result = run_cli("ppc --points " + points.string() + " --s 1.1 --alpha 1");
  REQUIRE(result.exit_code == 0);
  auto rows = read_csv_rows(result.out);
  REQUIRE(rows.size() == 2);  // header + one data row
  CHECK(rows[0] == std::vector<std::string>{"n", "s", "alpha", "pair_count", "r"});
  CHECK(rows[1][0] == "4");
  CHECK(rows[1][3] == "8");
  CHECK(std::stod(rows[1][4]) == 2.0);

  result = run_cli("ppc --points " + points.string() + " --s 0.9 --alpha 1");
  REQUIRE(result.exit_code == 0);
  rows = read_csv_rows(result.out);
  CHECK(std::stod(rows[1][4]) == 0.0);

  // --alpha defaults to 1
  result = run_cli("ppc --points " + points.string() + " --s 1.1");
  REQUIRE(result.exit_code == 0);
  rows = read_csv_rows(result.out);
  CHECK(rows[1][2] == "1");
  CHECK(std::stod(rows[1][4]) == 2.0);

  CHECK(run_cli("ppc --points " + points.string() + " --gen iid --n 4 --s 1").exit_code == 2);
}

TEST_CASE("ppc rejects undersized inputs with exit 1") {
  const fs::path single = scratch_dir() / "single.txt";
  write_file(single, "0.5\n");
  CHECK(run_cli("ppc --points " + single.string() + " --s 1").exit_code == 1);
}

TEST_CASE("ppc prefix scan evaluates prefixes") {
  const auto result =
      run_cli("ppc --gen kronecker --c 0.6180339887498949 --x1 0 --n 1024 --s 1 "
              "--alpha 1 --prefix-scan 256,512,1024");
  REQUIRE(result.exit_code == 0);
  const auto rows = read_csv_rows(result.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "256");
  CHECK(rows[2][0] == "512");
  CHECK(rows[3][0] == "1024");
}

TEST_CASE("discrepancy command") {
  const fs::path lattice = scratch_dir() / "lattice.txt";
  std::ostringstream body;
  for (int k = 0; k < 10; ++k) body << (k / 10.0) << "\n";
  write_file(lattice, body.str());
  auto result = run_cli("discrepancy --points " + lattice.string());
  REQUIRE(result.exit_code == 0);
  auto rows = read_csv_rows(result.out);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(0.1));

  const fs::path single = scratch_dir() / "one.txt";
  write_file(single, "0.0\n");
  result = run_cli("discrepancy --points " + single.string());
  CHECK(std::stod(read_csv_rows(result.out)[1][1]) == doctest::Approx(1.0));

  const fs::path anti = scratch_dir() / "anti.txt";
  write_file(anti, "0.0\n0.5\n");
  result = run_cli("discrepancy --points " + anti.string());
  CHECK(std::stod(read_csv_rows(result.out)[1][1]) == doctest::Approx(0.5));

  const fs::path empty = scratch_dir() / "empty.txt";
  write_file(empty, "# nothing here\n");
  CHECK(run_cli("discrepancy --points " + empty.string()).exit_code == 1);
}

TEST_CASE("spectral command") {
  auto result = run_cli("spectral --step uniform:0:1 --rmax 4");
  REQUIRE(result.exit_code == 0);
  auto rows = read_csv_rows(result.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][2]) <= 1e-12);

  result = run_cli("spectral --step two_point:0:0.5:0.5 --rmax 4");
  rows = read_csv_rows(result.out);
  CHECK(std::stod(rows[2][2]) == doctest::Approx(1.0));  // |c_2| = 1

  result = run_cli("spectral --step uniform:0:0.5 --rmax 1");
  rows = read_csv_rows(result.out);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(2.0 / 3.14159265358979323846).epsilon(1e-9));

  const auto profile_fail = run_cli("spectral --step two_point:0:0.5:0.5 --rmax 2 --profile 1,2");
  CHECK(profile_fail.exit_code == 1);
  CHECK(profile_fail.err.find("density") != std::string::npos);

  CHECK(run_cli("spectral --step nonsense:1 --rmax 2").exit_code == 2);
}

TEST_CASE("experiment run emits deterministic documents and summary") {
  const fs::path cfg_path = scratch_dir() / "exp.cfg";
  write_file(cfg_path,
             "schema_version = ppc.config/1\n"
             "generator = batch\n"
             "m = 4\n"
             "s_values = 1\n"
             "alpha_values = 1\n"
             "n_values = 512\n"
             "replicates = 10\n"
             "master_seed = 99\n");
  const fs::path prefix_a = scratch_dir() / "run_a";
  const fs::path prefix_b = scratch_dir() / "run_b";
  REQUIRE(run_cli("experiment --config " + cfg_path.string() + " --out " + prefix_a.string())
              .exit_code == 0);
  REQUIRE(run_cli("experiment --config " + cfg_path.string() + " --out " + prefix_b.string())
              .exit_code == 0);
  const std::string doc_a = slurp(prefix_a.string() + ".result.txt");
  CHECK(doc_a == slurp(prefix_b.string() + ".result.txt"));
  CHECK(doc_a.find("schema_version = ppc.result/1") != std::string::npos);
  CHECK(doc_a.find("master_seed = 99") != std::string::npos);

  const std::string csv = slurp(prefix_a.string() + ".summary.csv");
  CHECK(csv == slurp(prefix_b.string() + ".summary.csv"));
  const auto rows = read_csv_rows(csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "batch(m=4)");

  // --check without a preset is a usage error
  CHECK(run_cli("experiment --config " + cfg_path.string() + " --check").exit_code == 2);
  // malformed config is a usage error
  const fs::path bad = scratch_dir() / "bad.cfg";
  write_file(bad, "schema_version = ppc.config/1\ngenerator = iid\n");
  CHECK(run_cli("experiment --config " + bad.string()).exit_code == 2);
}

TEST_CASE("experiment --check reports band results through the exit code") {
  const fs::path prefix = scratch_dir() / "check_run";
  const auto pass = run_cli("experiment --preset ex_two_point --check --out " + prefix.string());
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);

  // this preset's (alpha=0.75, s=0.5) cell sits at its finite-size mean
  // 2s - N^(alpha-1) = 0.9375, outside the 5% band, so the check trips
  const auto fail =
      run_cli("experiment --preset thm2ii_seq_weak_ppc --check --out " + prefix.string());
  CHECK(fail.exit_code == 3);
  CHECK(fail.out.find("FAIL") != std::string::npos);
}
