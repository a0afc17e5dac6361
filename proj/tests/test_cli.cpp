#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "veckin/cli.hpp"

using namespace veckin;

namespace {

int run_binary(const std::string& args) {
  const std::string cmd = std::string(VECKIN_BIN_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_args") {
  RunManifest m = parse_args({"run", "--case", "advection", "--scheme", "ec", "--nx",
                              "256", "--cfl", "0.1"});
  CHECK(m.mode == RunManifest::Mode::Run);
  CHECK(m.case_name == "advection");
  CHECK(*m.scheme == SchemeKind::EC);
  CHECK(*m.nx == 256);
  CHECK(*m.cfl == 0.1);
  CHECK(m.lambda_policy == LambdaPolicy::PerStep);

  RunManifest e = parse_args({"eoc", "--case", "sw-periodic", "--grids", "32,64,128,256"});
  CHECK(e.mode == RunManifest::Mode::Eoc);
  CHECK(e.grids == std::vector<int>{32, 64, 128, 256});

  RunManifest a = parse_args({"audit", "--case", "burgers", "--pairs", "500"});
  CHECK(a.mode == RunManifest::Mode::Audit);
  CHECK(a.audit_pairs == 500);

  CHECK_THROWS_AS(parse_args({"run"}), usage_error);                       // missing case
  CHECK_THROWS_AS(parse_args({"run", "--case", "advection", "--bogus"}), usage_error);
  CHECK_THROWS_AS(parse_args({}), usage_error);
  CHECK_THROWS_AS(parse_args({"run", "--case", "advection", "--lambda-policy", "x"}),
                  usage_error);
  CHECK_THROWS_AS(parse_args({"run", "--case", "advection", "--scheme", "es9"}),
                  usage_error);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("run") == 2);
  CHECK(run_binary("frobnicate") == 2);
  CHECK(run_binary("run --case no-such-case --out /tmp/veckin_t0") == 1);
  CHECK(run_binary("run --case advection --nx 32 --tend 0.05 --out /tmp/veckin_t1") == 0);
  // EC on the expansion problem loses positivity: runtime failure, partial report
  CHECK(run_binary("run --case sw-expansion --scheme ec --nx 32 --out /tmp/veckin_t2") ==
        1);
  CHECK(slurp("/tmp/veckin_t2/entropy.csv").size() > 0);
  CHECK(run_binary("audit --case burgers --pairs 500 --out /tmp/veckin_t3") == 0);
}

TEST_CASE("report files: shapes and byte-identical reruns") {
  RunManifest m = parse_args({"run", "--case", "advection", "--nx", "64", "--tend",
                              "0.3", "--out", "/tmp/veckin_d1"});
  CHECK(run_manifest(m) == 0);
  RunManifest m2 = m;
  m2.out_dir = "/tmp/veckin_d2";
  CHECK(run_manifest(m2) == 0);
  CHECK(slurp("/tmp/veckin_d1/solution.csv") == slurp("/tmp/veckin_d2/solution.csv"));
  CHECK(slurp("/tmp/veckin_d1/entropy.csv") == slurp("/tmp/veckin_d2/entropy.csv"));

  // solution.csv: header + one row per interior cell
  std::istringstream sol(slurp("/tmp/veckin_d1/solution.csv"));
  std::string line;
  int rows = 0;
  std::getline(sol, line);
  CHECK(line == "x,comp_0");
  while (std::getline(sol, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 64);

  // entropy.csv: header + one row per step (including t=0)
  std::istringstream ent(slurp("/tmp/veckin_d1/entropy.csv"));
  std::getline(ent, line);
  CHECK(line == "t,eta_mean,H_1,H_2,signed_eta,abs_eta,signed_H_1,signed_H_2,abs_H_1,abs_H_2");
  rows = 0;
  double last_t = -1.0;
  while (std::getline(ent, line))
    if (!line.empty()) {
      ++rows;
      last_t = std::atof(line.substr(0, line.find(',')).c_str());
    }
  CHECK(rows >= 2);
  CHECK(last_t == doctest::Approx(0.3));

  // eoc.csv: one row per grid, first order cell empty
  RunManifest e = parse_args({"eoc", "--case", "advection", "--grids", "16,32", "--tend",
                              "0.2", "--out", "/tmp/veckin_d3"});
  CHECK(run_manifest(e) == 0);
  std::istringstream eoc_file(slurp("/tmp/veckin_d3/eoc.csv"));
  std::getline(eoc_file, line);
  CHECK(line == "n,dx,l2,order");
  std::getline(eoc_file, line);
  CHECK(line.back() == ',');  // empty order on the first row
  std::getline(eoc_file, line);
  CHECK(line.back() != ',');

  // audit.csv
  RunManifest a = parse_args({"audit", "--case", "sw-dambreak", "--pairs", "300", "--out",
                              "/tmp/veckin_d4"});
  CHECK(run_manifest(a) == 0);
  std::istringstream audit_file(slurp("/tmp/veckin_d4/audit.csv"));
  std::getline(audit_file, line);
  CHECK(line == "check,value,threshold,pass");
}
