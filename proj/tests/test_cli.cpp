#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// end-to-end checks against the installed binary; path injected by CMake
#ifndef GCDTENSOR_CLI_PATH
#error "GCDTENSOR_CLI_PATH must be defined"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/gcdt_cli_stdout.txt";
  const std::string err_path = "/tmp/gcdt_cli_stderr.txt";
  const std::string cmd = std::string("\"") + GCDTENSOR_CLI_PATH + "\" " + args + " >" +
                          out_path + " 2>" + err_path;
  const int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

json first_stderr_line_as_json(const std::string& err) {
  const std::size_t nl = err.find('\n');
  return json::parse(err.substr(0, nl));
}

}  // namespace

TEST_CASE("build emits the gcd tensor and echoes its config") {
  RunResult r = run_cli("build --set 4,6");
  REQUIRE(r.code == 0);
  json t = json::parse(r.out);  // stdout is pure JSON
  CHECK(t["order"] == 2);
  CHECK(t["dim"] == 2);
  CHECK(t["scalar"] == "int");
  CHECK(t["entries"] == json::array({"4", "2", "2", "6"}));

  json cfg = first_stderr_line_as_json(r.err);
  CHECK(cfg["command"] == "build");
  CHECK(cfg["config"]["set"] == "4,6");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("build").code == 1);                       // missing --set
  CHECK(run_cli("build --set 1,2 --bogus").code == 1);     // unknown flag
  CHECK(run_cli("build --set 1,x").code == 1);             // bad element
  CHECK(run_cli("frobnicate").code == 1);                  // unknown command
  CHECK(run_cli("decompose --set 1,2 --scheme nope").code == 1);
  CHECK(run_cli("det --set 1,2").code == 1);               // no mode picked
  CHECK(run_cli("det --set 1,2 --closed-form phi --oracle").code == 1);

  RunResult bad = run_cli("det --set 2,4,6 --closed-form phi");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not factor-closed") != std::string::npos);
}

TEST_CASE("determinant verification agrees on a factor-closed set") {
  RunResult r = run_cli("det --set 1,2,3,4 --order 2 --closed-form phi --verify-oracle");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["oracle_agreement"] == true);
  CHECK(j["closed_form"]["value"] == "4");
  CHECK(j["closed_form"]["method"] == "closed_form_phi");
  CHECK(j["oracle"]["value"] == "4");
  CHECK(j["oracle"]["method"] == "matrix_bareiss");
}

TEST_CASE("a tensor that contradicts the closed form exits with 2") {
  spit("/tmp/gcdt_cli_notgcd.json",
       R"({"order":2,"dim":2,"scalar":"int","entries":["1","1","1","3"]})");
  RunResult r =
      run_cli("det --in /tmp/gcdt_cli_notgcd.json --set 1,2 --closed-form phi --verify-oracle");
  CHECK(r.code == 2);
  CHECK(r.err.find("disagrees with the oracle determinant") != std::string::npos);
  json j = json::parse(r.out);  // the report is still written
  CHECK(j["oracle_agreement"] == false);
}

TEST_CASE("build, determinant, and decomposition round trip through files") {
  REQUIRE(run_cli("build --set 1,2,3,6 --order 2 --out /tmp/gcdt_cli_t.json").code == 0);

  RunResult oracle = run_cli("det --in /tmp/gcdt_cli_t.json --oracle");
  REQUIRE(oracle.code == 0);
  RunResult closed = run_cli("det --set 1,2,3,6 --closed-form phi");
  REQUIRE(closed.code == 0);
  CHECK(json::parse(oracle.out)["value"] == json::parse(closed.out)["value"]);
  CHECK(json::parse(closed.out)["value"] == "4");

  RunResult dec = run_cli("decompose --in /tmp/gcdt_cli_t.json --scheme psi");
  REQUIRE(dec.code == 0);
  json d = json::parse(dec.out);
  CHECK(d["scheme"] == "psi_gcd_closed");
  CHECK(d["weights"] == json::array({"1", "1", "2", "2"}));
  CHECK(d["spanning"] == true);
}

TEST_CASE("a non-gcd tensor is rejected as decomposition input") {
  spit("/tmp/gcdt_cli_notgcd2.json",
       R"({"order":2,"dim":2,"scalar":"int","entries":["1","2","2","3"]})");
  RunResult r = run_cli("decompose --in /tmp/gcdt_cli_notgcd2.json --scheme phi");
  CHECK(r.code == 1);
  CHECK(r.err.find("not the gcd tensor") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical reports") {
  RunResult a = run_cli("psd-check --set 4,6,9 --order 2 --trials 60 --seed 11");
  RunResult b = run_cli("psd-check --set 4,6,9 --order 2 --trials 60 --seed 11");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["verdict"] == "no_violation_found");
}

TEST_CASE("psd-check finds the indefinite witness of the squared example") {
  // order-4 binary form with entries 9 / 4 / 1 by ones-count 0 / 1 / >= 2
  spit("/tmp/gcdt_cli_sq.json",
       R"({"order":4,"dim":2,"scalar":"float64",
           "entries":[9,4,4,1,4,1,1,1,4,1,1,1,1,1,1,1]})");
  RunResult r = run_cli("psd-check --in /tmp/gcdt_cli_sq.json --trials 200 --seed 0");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "witness_found");
  CHECK(j["witness"] == json::array({1.0, -2.0}));
  CHECK(j["witness_value"] == -15.0);
}

TEST_CASE("extreme-form reaches the known matrix minimum") {
  RunResult r = run_cli("extreme-form --set 1,2 --order 2 --mode min "
                        "--restarts 6 --iterations 200 --seed 0");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  const double expected = (3.0 - std::sqrt(5.0)) / 2.0;
  CHECK(std::fabs(j["value"].get<double>() - expected) < 1e-9);
}

TEST_CASE("scan-conjecture passes on a clean range") {
  RunResult r = run_cli("scan-conjecture --n 2 --order 2 --max 20");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["scanned"] == 190);
  CHECK(j["violations"] == 0);
  CHECK(j["equality_iff_factor_closed"] == true);
}

TEST_CASE("lattice commands cover build, tensor, determinant, decomposition") {
  spit("/tmp/gcdt_cli_diamond.json", R"({
    "elements": ["0", "a", "b", "1"],
    "pairs": [["0","a"], ["0","b"], ["a","1"], ["b","1"]],
    "g": {"0": "0", "a": 1, "b": 1, "1": 2}
  })");

  RunResult summary = run_cli("lattice-build --in /tmp/gcdt_cli_diamond.json");
  REQUIRE(summary.code == 0);
  json s = json::parse(summary.out);
  CHECK(s["elements"] == json::array({"0", "a", "b", "1"}));
  CHECK(s["meets"][1][2] == "0");

  RunResult tensor =
      run_cli("lattice-build --in /tmp/gcdt_cli_diamond.json --tensor --set a,b,1");
  REQUIRE(tensor.code == 0);
  json t = json::parse(tensor.out);
  CHECK(t["scalar"] == "rational");
  CHECK(t["entries"] ==
        json::array({"1", "0", "1", "0", "1", "1", "1", "1", "2"}));

  RunResult det =
      run_cli("lattice-det --in /tmp/gcdt_cli_diamond.json --set 0,a,b --verify-oracle");
  REQUIRE(det.code == 0);
  json dj = json::parse(det.out);
  CHECK(dj["oracle_agreement"] == true);
  CHECK(dj["closed_form"]["value"] == "0");

  RunResult dec = run_cli("lattice-decompose --in /tmp/gcdt_cli_diamond.json --set a,b");
  REQUIRE(dec.code == 0);
  json j = json::parse(dec.out);
  CHECK(j["closure"] == json::array({"a", "b", "0"}));
  CHECK(j["diagonal"] == json::array({"1", "1", "0"}));
  CHECK(j["spanning"] == true);
  CHECK(j["weights_positive"] == false);
}

TEST_CASE("float valuations are rejected where exactness is required") {
  spit("/tmp/gcdt_cli_floatlat.json", R"({
    "elements": ["a", "b"],
    "pairs": [["a","b"]],
    "g": {"a": 0.5, "b": 2}
  })");
  RunResult r = run_cli("lattice-det --in /tmp/gcdt_cli_floatlat.json --set a,b");
  CHECK(r.code == 1);
  CHECK(r.err.find("exact valuation") != std::string::npos);
}

TEST_CASE("fractional powers refuse negative entries") {
  spit("/tmp/gcdt_cli_neg.json",
       R"({"order":2,"dim":2,"scalar":"float64","entries":[1,-1,-1,1]})");
  RunResult r = run_cli("hadamard-power --in /tmp/gcdt_cli_neg.json --power 0.5");
  CHECK(r.code == 1);
  CHECK(r.err.find("fractional power undefined") != std::string::npos);
}

TEST_CASE("hadamard-power keeps integer exponents exact") {
  RunResult cube = run_cli("hadamard-power --set 2,3 --order 2 --power 3");
  REQUIRE(cube.code == 0);
  json c = json::parse(cube.out);
  CHECK(c["scalar"] == "int");
  CHECK(c["entries"] == json::array({"8", "1", "1", "27"}));

  RunResult inv = run_cli("hadamard-power --set 2,3 --order 2 --power=-1");
  REQUIRE(inv.code == 0);
  json i = json::parse(inv.out);
  CHECK(i["scalar"] == "rational");
  CHECK(i["entries"] == json::array({"1/2", "1", "1", "1/3"}));

  RunResult frac = run_cli("hadamard-power --set 4,6 --order 2 --power 0.5");
  REQUIRE(frac.code == 0);
  json f = json::parse(frac.out);
  CHECK(f["scalar"] == "float64");
  CHECK(f["entries"][0] == 2.0);
}
