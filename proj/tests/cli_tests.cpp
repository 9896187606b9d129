// End-to-end checks of the command-line binary (path injected at build time).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polaris/io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_path = "/tmp/polaris_cli_test_out.txt";
  const std::string cmd = std::string(POLARIS_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

polaris::Json run_json(const std::string& args) {
  const RunResult r = run(args + " --no-meta");
  REQUIRE(r.exit_code == 0);
  return polaris::Json::parse(r.out);
}

}  // namespace

TEST_CASE("cumulative subcommand against the reference table") {
  const auto j = run_json("cumulative --state fixture:2 --M 2");
  CHECK(j.at("A_M").get<double>() < 1e-10);
  CHECK(j.at("max_value").get<double>() == doctest::Approx(0.6857142857142857).epsilon(1e-12));
}

TEST_CASE("constellation then reconstruct round-trips the state") {
  const auto cj = run_json("constellation --state fixture:7/2");
  polaris::write_json_file("/tmp/polaris_cli_test_pts.json", cj);
  const auto sj = run_json("reconstruct --points /tmp/polaris_cli_test_pts.json");
  const polaris::SpinState back = polaris::state_from_json(sj);
  CHECK(polaris::fidelity(back, polaris::load_state("fixture:7/2")) > 1.0 - 1e-9);
}

TEST_CASE("design-order on an exported constellation") {
  const auto cj = run_json("constellation --state fixture:2");
  polaris::write_json_file("/tmp/polaris_cli_test_tet.json", cj);
  const auto dj = run_json("design-order --points /tmp/polaris_cli_test_tet.json --tmax 6");
  CHECK(dj.at("design_order").get<int>() == 2);
  CHECK(dj.at("points").get<int>() == 4);
  CHECK(dj.at("residuals").size() == 6);
}

TEST_CASE("multipoles output is self-consumable") {
  const auto j = run_json("multipoles --state fixture:3");
  CHECK(j.at("S").get<std::string>() == "3");
  CHECK(j.at("multipoles").size() == 49);
  const auto csv = run("multipoles --state fixture:3 --out csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("K,q,re,im\n", 0) == 0);
}

TEST_CASE("search subcommand reaches the tabulated minimum") {
  const auto j = run_json("search --S 3 --M 3 --starts 16 --seed 1");
  CHECK(j.at("best_value").get<double>() < 1e-8);
  CHECK(j.at("certified_order").get<int>() == 3);
}

TEST_CASE("overlap and sensitivity subcommands") {
  const auto j = run_json("overlap --state fixture:2 --axis 0,0,1 --angle 0");
  CHECK(j.at("overlap").get<double>() == doctest::Approx(1.0));
  const auto s = run_json("sensitivity --state fixture:2 --axes 100 --seed 3");
  CHECK(s.at("max").get<double>() - s.at("min").get<double>() < 1e-9);
}

TEST_CASE("fixtures --verify passes everywhere") {
  const auto j = run_json("fixtures --verify");
  REQUIRE(j.at("fixtures").size() == 13);
  for (const auto& f : j.at("fixtures")) {
    CHECK(f.at("verify").at("passed").get<bool>());
  }
}

TEST_CASE("byte determinism with --no-meta") {
  const auto a = run("search --S 2 --M 2 --starts 8 --seed 7 --no-meta");
  const auto b = run("search --S 2 --M 2 --starts 8 --seed 7 --no-meta");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // default output carries a meta block
  const auto c = run("cumulative --state fixture:1 --M 1");
  CHECK(c.out.find("\"meta\"") != std::string::npos);
}

TEST_CASE("error paths use distinct exit codes") {
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("cumulative --state fixture:2").exit_code == 2);            // missing --M
  CHECK(run("cumulative --state fixture:2 --M 9").exit_code == 2);      // range violation
  CHECK(run("cumulative --state /nope.json --M 1").exit_code == 2);     // unreadable input
  CHECK(run("overlap --state fixture:2 --axis bogus --angle 1").exit_code == 2);
  std::ofstream("/tmp/polaris_cli_bad.json") << "{ not json";
  CHECK(run("multipoles --state /tmp/polaris_cli_bad.json").exit_code == 2);
}
