#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gcdt/gcd_tensor.hpp"
#include "gcdt/json_io.hpp"
#include "gcdt/poset.hpp"
#include "gcdt/positivity.hpp"

using namespace gcdt;
using nlohmann::json;

TEST_CASE("integer tensor round trip") {
  Tensor<BigInt> t = build_gcd_tensor(IntegerSet({4, 6}), 2);
  std::string s = tensor_to_json(t);
  json j = json::parse(s);
  CHECK(j["order"] == 2);
  CHECK(j["dim"] == 2);
  CHECK(j["scalar"] == "int");
  CHECK(j["entries"][0] == "4");  // exact values as decimal strings

  AnyTensor back = tensor_from_json(s);
  REQUIRE(std::holds_alternative<Tensor<BigInt>>(back));
  CHECK(std::get<Tensor<BigInt>>(back) == t);
}

TEST_CASE("huge integers survive the string encoding") {
  Tensor<BigInt> t = Tensor<BigInt>::cubic(2, 1);
  t[0] = ipow(BigInt(7), 100);
  AnyTensor back = tensor_from_json(tensor_to_json(t));
  CHECK(std::get<Tensor<BigInt>>(back) == t);
}

TEST_CASE("rational tensor round trip") {
  Tensor<BigRat> t = Tensor<BigRat>::cubic(2, 2);
  t.at({0, 0}) = BigRat(1, 3);
  t.at({0, 1}) = BigRat(-7, 2);
  t.at({1, 0}) = BigRat(-7, 2);
  t.at({1, 1}) = BigRat(5);
  std::string s = tensor_to_json(t);
  json j = json::parse(s);
  CHECK(j["scalar"] == "rational");
  CHECK(j["entries"][0] == "1/3");
  CHECK(j["entries"][3] == "5");  // integral rationals drop the denominator

  AnyTensor back = tensor_from_json(s);
  CHECK(std::get<Tensor<BigRat>>(back) == t);
}

TEST_CASE("float tensor round trip keeps shortest decimals") {
  Tensor<double> t = Tensor<double>::cubic(2, 2);
  t.at({0, 0}) = 0.1;
  t.at({0, 1}) = -2.5;
  t.at({1, 0}) = -2.5;
  t.at({1, 1}) = 1e-17;
  std::string s = tensor_to_json(t);
  json j = json::parse(s);
  CHECK(j["scalar"] == "float64");
  CHECK(j["entries"][0] == 0.1);

  AnyTensor back = tensor_from_json(s);
  REQUIRE(std::holds_alternative<Tensor<double>>(back));
  CHECK(std::get<Tensor<double>>(back) == t);  // bit-exact
}

TEST_CASE("exact tensors accept plain json integers on input") {
  AnyTensor t = tensor_from_json(
      R"({"order":2,"dim":2,"scalar":"int","entries":[1,2,2,4]})");
  CHECK(std::get<Tensor<BigInt>>(t).at({1, 1}) == BigInt(4));
}

TEST_CASE("serialization is deterministic") {
  Tensor<BigInt> t = build_gcd_tensor(IntegerSet({6, 10, 15}), 3);
  CHECK(tensor_to_json(t) == tensor_to_json(t));
}

TEST_CASE("malformed tensor input is rejected with a usage error") {
  CHECK_THROWS_AS(tensor_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(tensor_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(tensor_from_json(R"({"order":2,"dim":2,"scalar":"int"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_from_json(R"({"order":2,"dim":2,"scalar":"int","entries":[1,2,3]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_from_json(R"({"order":2,"dim":2,"scalar":"decimal","entries":[1,2,3,4]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tensor_from_json(R"({"order":2,"dim":2,"scalar":"int","entries":["1","x","1","1"]})"),
      std::invalid_argument);
  // floats cannot hide inside an exact tensor
  CHECK_THROWS_AS(
      tensor_from_json(R"({"order":2,"dim":2,"scalar":"int","entries":[1.5,2,2,4]})"),
      std::invalid_argument);
  // dimension guard: 10^8 entries requested
  CHECK_THROWS_AS(
      tensor_from_json(R"({"order":8,"dim":10,"scalar":"int","entries":[]})"),
      std::invalid_argument);
}

TEST_CASE("decomposition report carries weights and the span flag") {
  CpDecomposition<BigRat> d = scp_decompose(IntegerSet({4, 6}), 2,
                                            SchemeKind::phi_factor_closed);
  json j = json::parse(decomposition_to_json(d));
  CHECK(j["order"] == 2);
  CHECK(j["scheme"] == "phi_factor_closed");
  CHECK(j["weights"].size() == 5);
  CHECK(j["weights"][0] == "1");
  CHECK(j["vectors"][2] == json::array({0, 1}));
  CHECK(j["spanning"] == true);
  CHECK(j["weights_positive"] == true);

  CpDecomposition<double> f = scp_decompose_fractional(IntegerSet({1, 2}), 2, 0.5);
  json jf = json::parse(decomposition_to_json(f));
  CHECK(jf["scheme"] == "fractional(0.5)");
  CHECK(jf["weights"][0] == 1.0);  // float weights stay numbers
}

TEST_CASE("factorization report shape") {
  GcdFactorization f = factorize(IntegerSet({4, 6}), 2, SchemeKind::phi_factor_closed);
  json j = json::parse(
      factorization_to_json(f, WeightScheme{SchemeKind::phi_factor_closed, "", 0.0}));
  CHECK(j["order"] == 2);
  CHECK(j["set"] == json::array({4, 6}));
  CHECK(j["closure"] == json::array({1, 2, 3, 4, 6}));
  CHECK(j["diagonal"] == json::array({"1", "1", "2", "2", "2"}));
  CHECK(j["incidence"][0] == json::array({1, 1, 0, 1, 0}));
  CHECK(j["incidence"][1] == json::array({1, 1, 1, 0, 1}));
}

TEST_CASE("determinant reports include the factored form") {
  DetReport r = det_closed_form(IntegerSet({1, 2, 3, 4, 5}), 2,
                                SchemeKind::phi_factor_closed);
  json j = json::parse(det_report_to_json(r));
  CHECK(j["method"] == "closed_form_phi");
  CHECK(j["bases"] == json::array({"1", "1", "2", "2", "4"}));
  CHECK(j["exponent"] == "1");
  CHECK(j["value"] == "16");
  CHECK(j["expanded"] == true);

  // oversized closed form omits the value
  DetReport big = make_closed_form_report({BigRat(2)}, 3, 40, DetMethod::closed_form_phi);
  json jb = json::parse(det_report_to_json(big));
  CHECK(jb["expanded"] == false);
  CHECK(jb["value"].is_null());

  json jv = json::parse(det_verification_to_json(
      r, tensor_det_oracle(build_gcd_tensor(IntegerSet({1, 2, 3, 4, 5}), 2)), true));
  CHECK(jv["oracle_agreement"] == true);
  CHECK(jv["closed_form"]["method"] == "closed_form_phi");
  CHECK(jv["oracle"]["method"] == "matrix_bareiss");
}

TEST_CASE("positivity and extreme reports mirror their fields") {
  Tensor<double> t = make_diagonal(std::vector<double>{1.0, -1.0}, 2);
  json j = json::parse(positivity_report_to_json(psd_sample_check(t, 25, 3)));
  CHECK(j["verdict"] == "witness_found");
  CHECK(j["witness"].is_array());
  CHECK(j["trials"] == 25);
  CHECK(j["seed"] == 3);

  Tensor<double> g = to_float64(build_gcd_tensor(IntegerSet({1, 2}), 2));
  json je = json::parse(extreme_result_to_json(
      extreme_form_on_sphere(g, ExtremeMode::min, 4, 50, 0)));
  CHECK(je["mode"] == "min");
  CHECK(je["argmin_vector"].size() == 2);
  CHECK(je["restarts"] == 4);

  json jn = json::parse(positivity_report_to_json(psd_sample_check(g, 10, 0)));
  CHECK(jn["verdict"] == "no_violation_found");
  CHECK(jn["witness"].is_null());
}

TEST_CASE("scan report JSON counts") {
  json j = json::parse(scan_report_to_json(conjecture_scan(2, 2, 8)));
  CHECK(j["scanned"] == 28);
  CHECK(j["violations"] == 0);
  CHECK(j["equality_iff_factor_closed"] == true);
  CHECK(j["violation_examples"] == json::array());
}

TEST_CASE("lattice input parsing") {
  LatticeSpec spec = lattice_from_json(R"({
    "elements": ["0", "a", "b", "1"],
    "pairs": [["0","a"], ["0","b"], ["a","1"], ["b","1"]],
    "g": {"0": "0", "a": "1", "b": "1", "1": "2"}
  })");
  CHECK(spec.elements.size() == 4);
  CHECK(spec.pairs.size() == 4);
  CHECK(spec.has_valuation);
  CHECK(!spec.valuation_is_float);
  CHECK(spec.exact_valuation.at("1") == BigRat(2));

  // one non-integer number switches the whole valuation to float64
  LatticeSpec fspec = lattice_from_json(R"({
    "elements": ["a", "b"],
    "pairs": [["a","b"]],
    "g": {"a": 0.5, "b": 2}
  })");
  CHECK(fspec.valuation_is_float);
  CHECK(fspec.float_valuation.at("a") == 0.5);

  // integers and p/q strings stay exact
  LatticeSpec qspec = lattice_from_json(R"({
    "elements": ["a", "b"],
    "pairs": [["a","b"]],
    "g": {"a": "1/2", "b": 3}
  })");
  CHECK(!qspec.valuation_is_float);
  CHECK(qspec.exact_valuation.at("a") == BigRat(1, 2));

  LatticeSpec nog = lattice_from_json(R"({"elements": ["a"], "pairs": []})");
  CHECK(!nog.has_valuation);

  CHECK_THROWS_AS(lattice_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(lattice_from_json(R"({"pairs": []})"), std::invalid_argument);
  CHECK_THROWS_AS(lattice_from_json(R"({"elements": ["a"], "pairs": [["a"]]})"),
                  std::invalid_argument);
}

TEST_CASE("lattice summary lists the meet table") {
  MeetSemilattice l = MeetSemilattice::build(
      {"0", "a", "b", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  json j = json::parse(lattice_summary_to_json(l));
  CHECK(j["elements"] == json::array({"0", "a", "b", "1"}));
  CHECK(j["meets"][1][2] == "0");  // meet(a, b)
  CHECK(j["meets"][1][3] == "a");  // meet(a, 1)
}

TEST_CASE("meet factorization report shape") {
  MeetSemilattice l = MeetSemilattice::divisibility(IntegerSet({1, 2, 4, 6}));
  Valuation<BigRat> g;
  for (const std::string& lab : l.elements()) g[lab] = BigRat(BigInt(lab));
  MeetFactorization<BigRat> f =
      meet_decompose_factorize(l, {"4", "6"}, g, 2, {"2", "4", "6"});
  json j = json::parse(meet_factorization_to_json(f, {"4", "6"}));
  CHECK(j["scheme"] == "meet_totient");
  CHECK(j["set"] == json::array({"4", "6"}));
  CHECK(j["closure"] == json::array({"2", "4", "6"}));
  CHECK(j["diagonal"] == json::array({"2", "2", "4"}));
  CHECK(j["spanning"] == true);
}

TEST_CASE("non-cubical tensors cannot be serialized") {
  Tensor<BigInt> t(std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(tensor_to_json(t), std::invalid_argument);
}
