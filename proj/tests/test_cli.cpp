#include <catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qlc/config.hpp"
#include "qlc/drivers.hpp"

using namespace qlc;
using Catch::Approx;

namespace {

std::string write_temp(const std::string& name, const std::string& contents) {
  std::string path = "/tmp/qlc_test_cli_" + name;
  std::ofstream out(path);
  out << contents;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("key=value config parsing") {
  std::string path = write_temp("cfg.txt",
                                "# comment line\n"
                                "potential = ldg\n"
                                "a=2.5  # trailing comment\n"
                                "levels = 2, 4, 8\n"
                                "\n"
                                "n=3\n");
  KeyValueConfig cfg = KeyValueConfig::from_file(path);
  CHECK(cfg.get("potential", "") == "ldg");
  CHECK(cfg.get_double("a", 0.0) == 2.5);
  CHECK(cfg.get_int("n", 0) == 3);
  CHECK(cfg.get_int_list("levels", {}) == std::vector<int>{2, 4, 8});
  CHECK(cfg.get_double("missing", 7.0) == 7.0);
  CHECK_THROWS_AS(cfg.require("missing"), ConfigError);

  cfg.set_override("a=9");
  CHECK(cfg.get_double("a", 0.0) == 9.0);
  CHECK_THROWS_AS(cfg.set_override("no_equals_sign"), ConfigError);

  std::string bad = write_temp("bad.txt", "just a line without equals\n");
  CHECK_THROWS_AS(KeyValueConfig::from_file(bad), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::from_file("/nonexistent/file"), ConfigError);

  KeyValueConfig nn;
  nn.set("a", "not_a_number");
  CHECK_THROWS_AS(nn.get_double("a", 0.0), ConfigError);
  nn.set("n", "2.5");
  CHECK_THROWS_AS(nn.get_int("n", 0), ConfigError);
}

TEST_CASE("build_setup validation") {
  KeyValueConfig cfg;
  cfg.set("domain", "dodecahedron");
  CHECK_THROWS_AS(build_setup(cfg), ConfigError);

  KeyValueConfig bad_pot;
  bad_pot.set("n", "2");
  bad_pot.set("potential", "quintic");
  CHECK_THROWS_AS(build_setup(bad_pot), ConfigError);

  KeyValueConfig nonelliptic;
  nonelliptic.set("n", "2");
  nonelliptic.set("L3", "5");
  CHECK_THROWS_AS(build_setup(nonelliptic), EllipticityError);
  nonelliptic.set("allow_nonelliptic", "1");
  CHECK_NOTHROW(build_setup(nonelliptic));

  KeyValueConfig bm;
  bm.set("n", "2");
  bm.set("potential", "bm");
  bm.set("T", "-1");
  CHECK_THROWS_AS(build_setup(bm), ConfigError);
}

TEST_CASE("potential table output") {
  KeyValueConfig cfg;
  cfg.set("s_min", "0");
  cfg.set("s_max", "0.5");
  cfg.set("steps", "2");
  std::string out_dir = "/tmp/qlc_test_cli_pot";
  REQUIRE(cmd_potential_table(cfg, out_dir) == 0);
  auto rows = read_csv(out_dir + "/potential.csv");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == "s");
  // s = 0 row: f = -ln(4 pi), zero multiplier, Hessian 7.5 I
  CHECK(std::stod(rows[1][2]) == Approx(-std::log(4.0 * M_PI)).margin(1e-10));
  CHECK(std::stod(rows[1][3]) == Approx(0.0).margin(1e-9));
  CHECK(std::stod(rows[1][4]) == Approx(7.5).margin(1e-7));
  CHECK(std::stod(rows[1][5]) == Approx(7.5).margin(1e-7));
  // s = 0.5 row: strictly convex with a nonzero multiplier
  CHECK(std::stod(rows[2][3]) > 0.0);
  CHECK(std::stod(rows[2][4]) > 0.0);
  std::filesystem::remove_all(out_dir);
}

TEST_CASE("solve command smoke test") {
  KeyValueConfig cfg;
  cfg.set("n", "2");
  cfg.set("potential", "ldg");
  cfg.set("boundary", "uniaxial");
  cfg.set("s", "0.3");
  std::string out_dir = "/tmp/qlc_test_cli_solve";
  REQUIRE(cmd_solve(cfg, out_dir) == 0);

  std::string report = slurp(out_dir + "/report.txt");
  CHECK(report.find("converged 1") != std::string::npos);

  std::string vtk = slurp(out_dir + "/solution.vtk");
  CHECK(vtk.rfind("# vtk DataFile Version 3.0", 0) == 0);
  CHECK(vtk.find("DATASET UNSTRUCTURED_GRID") != std::string::npos);
  CHECK(vtk.find("POINT_DATA 27") != std::string::npos);
  CHECK(vtk.find("VECTORS director") != std::string::npos);
  CHECK(vtk.find("physicality_margin") != std::string::npos);
  std::filesystem::remove_all(out_dir);
}

TEST_CASE("infsup command smoke test") {
  KeyValueConfig cfg;
  cfg.set("levels", "2");
  std::string out_dir = "/tmp/qlc_test_cli_infsup";
  REQUIRE(cmd_infsup(cfg, out_dir) == 0);
  auto rows = read_csv(out_dir + "/infsup.csv");
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][2]) > 0.0);
  std::filesystem::remove_all(out_dir);
}

TEST_CASE("convergence command is deterministic") {
  KeyValueConfig cfg;
  cfg.set("levels", "2,4");
  std::string dir_a = "/tmp/qlc_test_cli_conv_a";
  std::string dir_b = "/tmp/qlc_test_cli_conv_b";
  REQUIRE(cmd_convergence(cfg, dir_a) == 0);
  REQUIRE(cmd_convergence(cfg, dir_b) == 0);
  std::string a = slurp(dir_a + "/convergence.csv");
  CHECK(a == slurp(dir_b + "/convergence.csv"));

  // the finest-level H1 order is already near one on these coarse meshes
  auto rows = read_csv(dir_a + "/convergence.csv");
  REQUIRE(rows.size() == 3);
  CHECK(std::stod(rows[2][5]) > 0.5);
  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
}
