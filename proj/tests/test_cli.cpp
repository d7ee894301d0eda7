// test_cli.cpp - command-line surface: flags, outputs, exit codes

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tessera/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace tessera;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("period subcommand with oracle cross-check") {
  Run r = cli({"period", "--case", "pi2", "--point", "1/2,1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("category: FixedTileCenter") != std::string::npos);
  CHECK(r.out.find("analytic period: 1") != std::string::npos);
  CHECK(r.out.find("agreement: yes") != std::string::npos);

  Run v = cli({"period", "--case", "pi3", "--point", "-3/2,0"});
  CHECK(v.code == 0);
  CHECK(v.out.find("analytic period: 72") != std::string::npos);
}

TEST_CASE("orbit subcommand") {
  Run r = cli({"orbit", "--case", "pi2", "--point", "3/10,2/5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("period: 4") != std::string::npos);
  CHECK(r.out.find("2/5,7/10") != std::string::npos);
}

TEST_CASE("level subcommand, including critical points") {
  Run r = cli({"level", "--case", "2pi3", "--level", "0", "--point", "3/2,1/2s3"});
  // unknown flags are usage errors
  CHECK(r.code == 2);

  Run ok = cli({"level", "--case", "2pi3", "--point", "3/2,1/2s3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("level: 1") != std::string::npos);
  CHECK(ok.out.find("tile: TriHex{0,0,1}") != std::string::npos);
  CHECK(ok.out.find("shape: Hexagon") != std::string::npos);

  Run crit = cli({"level", "--case", "pi2", "--point", "2,3/10"});
  CHECK(crit.code == 0);
  CHECK(crit.out.find("critical: true") != std::string::npos);
}

TEST_CASE("necklace subcommand") {
  Run r = cli({"necklace", "--case", "2pi3", "--level", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("beads: 10") != std::string::npos);
  CHECK(r.out.find("step: 3") != std::string::npos);
  CHECK(r.out.find("center period: 10") != std::string::npos);
  CHECK(r.out.find("rotation order: 3") != std::string::npos);
}

TEST_CASE("decimal points are rejected with a rational hint") {
  Run r = cli({"period", "--case", "pi2", "--point", "0.3,0.4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("rationals") != std::string::npos);
}

TEST_CASE("unknown case is a usage error") {
  Run r = cli({"period", "--case", "pi4", "--point", "1/2,1/2"});
  CHECK(r.code == 2);
}

TEST_CASE("verify invariance, json lines") {
  Run r = cli({"verify", "--case", "pi3", "--suite", "invariance", "--samples", "50", "--seed",
               "7", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"type\":\"summary\"") != std::string::npos);
  CHECK(r.out.find("\"suite\":\"invariance\"") != std::string::npos);
  CHECK(r.out.find("\"checked\":50") != std::string::npos);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("verify necklace and boundary suites") {
  Run n = cli({"verify", "--case", "pi2", "--suite", "necklace", "--level", "5"});
  CHECK(n.code == 0);
  CHECK(n.out.find("failures 0") != std::string::npos);

  Run b = cli({"verify", "--case", "2pi3", "--suite", "boundary", "--window", "-2,2,-2,2"});
  CHECK(b.code == 0);
}

TEST_CASE("verify periods census emits records") {
  Run r = cli({"verify", "--case", "pi2", "--suite", "periods", "--window", "-3,3,-3,3",
               "--lattice-denominator", "3", "--level", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"type\":\"census\"") != std::string::npos);
}

TEST_CASE("orbit failure within the cap exits 1") {
  Run r = cli({"orbit", "--case", "pi3", "--point", "-3/2,0", "--max-iter", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("period not found") != std::string::npos);
}

TEST_CASE("render and fractal write SVG files") {
  std::string path1 = "cli_render_test.svg";
  std::string path1b = "cli_render_test_b.svg";
  Run r = cli({"render", "--case", "pi2", "--window", "-3,3,-3,3", "--out", path1, "--labels"});
  CHECK(r.code == 0);
  Run rb = cli({"render", "--case", "pi2", "--window", "-3,3,-3,3", "--out", path1b, "--labels"});
  CHECK(rb.code == 0);
  std::ifstream f(path1), fb(path1b);
  REQUIRE(f.good());
  REQUIRE(fb.good());
  std::stringstream ss, ssb;
  ss << f.rdbuf();
  ssb << fb.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);
  CHECK(ss.str() == ssb.str());
  std::remove(path1.c_str());
  std::remove(path1b.c_str());

  std::string path2 = "cli_fractal_test.svg";
  Run fr = cli({"fractal", "--alpha", "1.2566", "--depth", "6", "--window", "-3,3,-3,3", "--out",
                path2});
  CHECK(fr.code == 0);
  std::remove(path2.c_str());
}

TEST_CASE("missing subcommand is a usage error") {
  Run r = cli({});
  CHECK(r.code == 2);
}
