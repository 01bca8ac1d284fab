#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gcdt/determinant.hpp"
#include "gcdt/poset.hpp"
#include "gcdt/positivity.hpp"

namespace gcdt {

/// Serialized tensors are cubical and tagged with one of the three scalar
/// kinds; exact integers travel as decimal strings, rationals as "p/q",
/// float64 as plain numbers.
using AnyTensor = std::variant<Tensor<BigInt>, Tensor<BigRat>, Tensor<double>>;

std::string tensor_to_json(const AnyTensor& t);
AnyTensor tensor_from_json(std::string_view text);

std::string decomposition_to_json(const CpDecomposition<BigRat>& d);
std::string decomposition_to_json(const CpDecomposition<double>& d);

std::string factorization_to_json(const GcdFactorization& f, const WeightScheme& scheme);
std::string meet_factorization_to_json(const MeetFactorization<BigRat>& f,
                                       const std::vector<std::string>& subset);
std::string meet_factorization_to_json(const MeetFactorization<double>& f,
                                       const std::vector<std::string>& subset);

std::string det_report_to_json(const DetReport& r);
/// Report plus the oracle cross-check outcome, for verification runs.
std::string det_verification_to_json(const DetReport& closed, const DetReport& oracle,
                                     bool agreement);

std::string scan_report_to_json(const ScanReport& r);
std::string positivity_report_to_json(const PositivityReport& r);
std::string extreme_result_to_json(const ExtremeFormResult& r);

/// Parsed lattice input: elements, covering/order pairs, and an optional
/// valuation. The valuation is exact when every value is a string or a JSON
/// integer; a single non-integer number switches the whole map to float64.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool has_valuation = false;
  bool valuation_is_float = false;
  Valuation<BigRat> exact_valuation;
  Valuation<double> float_valuation;
};

LatticeSpec lattice_from_json(std::string_view text);

/// Validation summary of a built lattice: elements plus the full meet table.
std::string lattice_summary_to_json(const MeetSemilattice& l);

}  // namespace gcdt
