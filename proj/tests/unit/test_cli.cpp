#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunOutput {
  int status = -1;
  std::string out;
};

RunOutput run(const std::string& args) {
  const std::string cmd = std::string(DELANGE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunOutput r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("delange_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("sum prints the exact value") {
  const RunOutput r = run("sum --family divisor:2 --x 10 --y 4 --workers 1");
  CHECK(r.status == 0);
  CHECK(r.out == "14\n");
}

TEST_CASE("coeffs emits the documented JSON shape") {
  const RunOutput r = run("coeffs --family divisor:2 --J 6");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("family") == "divisor:2");
  CHECK(j.at("kappa") == 2.0);
  CHECK(j.at("J") == 6);
  CHECK(j.at("lambda_l").size() == 7);
  CHECK(j.at("lambda_l")[0][0].get<double>() == doctest::Approx(1.0));
  CHECK(j.at("lambda_l")[0][1].get<double>() == 0.0);
  CHECK(j.at("gamma_j").size() == 7);
}

TEST_CASE("theta text and json") {
  const RunOutput t = run("theta --kappa 1");
  REQUIRE(t.status == 0);
  CHECK(t.out.find("theta=0.6265560165975104") != std::string::npos);
  CHECK(t.out.find("branch=case1") != std::string::npos);
  const RunOutput j = run("theta --kappa 10 --format json");
  REQUIRE(j.status == 0);
  CHECK(nlohmann::json::parse(j.out).at("branch") == "case2");
}

TEST_CASE("exit codes") {
  CHECK(run("theta --kappa 1 --delta 1 --regime lindelof").status == 1);
  CHECK(run("sum --family divisor:2 --x ten --y 4").status == 2);
  CHECK(run("sum --family nosuch --x 10 --y 4").status == 1);
  CHECK(run("").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("coeffs").status == 2);
  CHECK(run("sum --family one --x 10 --y 4 --format csv").status == 2);
  CHECK(run("contour --zeros /nonexistent/zeros.txt").status == 1);
}

TEST_CASE("experiment CSV records its configuration") {
  const RunOutput r = run("experiment --family one --x-grid 10000,100000 --theta 0.5 --N 0 --workers 1");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  int preamble = 0, rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#"))
      ++preamble;
    else if (!header)
      header = line.starts_with("family,x,y,N,");
    else
      ++rows;
  }
  CHECK(preamble > 3);
  CHECK(header);
  CHECK(rows == 2);
  CHECK(r.out.find("# theta=0.5") != std::string::npos);
  CHECK(r.out.find("# subcommand=experiment") != std::string::npos);
}

TEST_CASE("config files fill unset options and flags win") {
  const std::string cfg = temp_path("run.cfg");
  {
    std::ofstream f(cfg);
    f << "# sum run\nfamily=divisor:2\nx=10\ny=100\n";
  }
  const RunOutput r = run("sum --config " + cfg + " --y 4 --workers 1");
  CHECK(r.status == 0);
  CHECK(r.out == "14\n");
  CHECK(run("sum --config /nonexistent/run.cfg").status == 1);
  std::filesystem::remove(cfg);
}

TEST_CASE("predict with exact comparison") {
  const RunOutput r = run("predict --family divisor:2 --x 10000000 --theta 0.8 --N 1 --exact --format json --workers 1");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("y") == 398108);
  CHECK(j.at("rel_error").get<double>() <= 0.01);
}

TEST_CASE("contour summary and polyline CSV") {
  const std::string csv = temp_path("contour.csv");
  const RunOutput r = run("contour --seed 5 --cstar 0.1 --summary --sigma 0.7 --emit-csv " + csv);
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("validation").at("clearance") == true);
  CHECK(j.at("validation").at("symmetric") == true);
  CHECK(j.at("piece_count").get<int>() > 10);
  CHECK(j.contains("density"));
  std::ifstream in(csv);
  std::string line;
  int rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    if (!header) {
      header = line == "piece,label,a_re,a_im,b_re,b_im";
      continue;
    }
    ++rows;
  }
  CHECK(header);
  CHECK(rows == j.at("piece_count").get<int>());
  std::filesystem::remove(csv);
  CHECK(run("contour --seed 5").status == 1);
}

TEST_CASE("hankel-check and perron-check reports") {
  const RunOutput h = run("hankel-check --u 1e6 --kappa 0.5 --l 0");
  REQUIRE(h.status == 0);
  const auto j = nlohmann::json::parse(h.out);
  for (const char* key : {"value_re", "value_im", "reference", "rel_dev", "nodes"}) CHECK(j.contains(key));
  CHECK(j.at("rel_dev").get<double>() <= 1e-3);
  const RunOutput m = run("hankel-check --mode ml --kappa 1 --l 0 --x 10000 --y 1000");
  REQUIRE(m.status == 0);
  CHECK(nlohmann::json::parse(m.out).at("rel_dev").get<double>() < 1e-6);
  const RunOutput p = run("perron-check --family one --x 10000 --y 1000 --T 100 --b-shift 1 --nodes 40");
  REQUIRE(p.status == 0);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj.at("reference") == 1000.0);
  CHECK(pj.contains("step_change"));
  CHECK(run("perron-check --family omega:0.5 --x 1000 --y 100 --T 100").status == 1);
}
