#include "gcdt/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace gcdt {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_checked(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
  }
  return j.at(name);
}

template <typename T>
ordered tensor_header(const Tensor<T>& t, const char* scalar) {
  if (!t.cubical()) throw std::invalid_argument("only cubical tensors are serialized");
  ordered j;
  j["order"] = t.order();
  j["dim"] = t.dim();
  j["scalar"] = scalar;
  return j;
}

}  // namespace

std::string tensor_to_json(const AnyTensor& t) {
  ordered j = std::visit(
      [](const auto& tensor) {
        using T = std::decay_t<decltype(tensor[0])>;
        ordered out;
        if constexpr (std::is_same_v<T, BigInt>) {
          out = tensor_header(tensor, "int");
          auto& entries = out["entries"] = ordered::array();
          for (std::size_t i = 0; i < tensor.size(); ++i) entries.push_back(format_int(tensor[i]));
        } else if constexpr (std::is_same_v<T, BigRat>) {
          out = tensor_header(tensor, "rational");
          auto& entries = out["entries"] = ordered::array();
          for (std::size_t i = 0; i < tensor.size(); ++i) entries.push_back(format_rat(tensor[i]));
        } else {
          out = tensor_header(tensor, "float64");
          auto& entries = out["entries"] = ordered::array();
          for (std::size_t i = 0; i < tensor.size(); ++i) entries.push_back(tensor[i]);
        }
        return out;
      },
      t);
  return j.dump(2);
}

AnyTensor tensor_from_json(std::string_view text) {
  const json j = parse_checked(text);
  const std::size_t order = field(j, "order").get<std::size_t>();
  const std::size_t dim = field(j, "dim").get<std::size_t>();
  const std::string scalar = field(j, "scalar").get<std::string>();
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");

  std::size_t expected = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (dim != 0 && expected > max_tensor_entries / dim) {
      throw std::invalid_argument("tensor exceeds the dense-storage guard of 10^7 entries");
    }
    expected *= dim;
  }
  if (entries.size() != expected) {
    throw std::invalid_argument("entry count " + std::to_string(entries.size()) +
                                " does not match dim^order = " + std::to_string(expected));
  }

  auto entry_string = [](const json& e) -> std::string {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    if (e.is_number_unsigned()) return std::to_string(e.get<unsigned long long>());
    throw std::invalid_argument("exact entries must be decimal strings");
  };

  if (scalar == "int") {
    Tensor<BigInt> t = Tensor<BigInt>::cubic(order, dim);
    for (std::size_t i = 0; i < expected; ++i) t[i] = parse_int(entry_string(entries[i]));
    return t;
  }
  if (scalar == "rational") {
    Tensor<BigRat> t = Tensor<BigRat>::cubic(order, dim);
    for (std::size_t i = 0; i < expected; ++i) t[i] = parse_rat(entry_string(entries[i]));
    return t;
  }
  if (scalar == "float64") {
    Tensor<double> t = Tensor<double>::cubic(order, dim);
    for (std::size_t i = 0; i < expected; ++i) {
      const json& e = entries[i];
      if (!e.is_number()) throw std::invalid_argument("float64 entries must be numbers");
      t[i] = e.get<double>();
    }
    return t;
  }
  throw std::invalid_argument("unknown scalar kind '" + scalar + "'");
}

namespace {

template <typename W>
ordered decomposition_body(const CpDecomposition<W>& d) {
  ordered j;
  j["order"] = d.order;
  j["scheme"] = d.scheme.label();
  auto& weights = j["weights"] = ordered::array();
  for (const W& w : d.weights) {
    if constexpr (std::is_same_v<W, BigRat>) {
      weights.push_back(format_rat(w));
    } else {
      weights.push_back(w);
    }
  }
  auto& vectors = j["vectors"] = ordered::array();
  for (const auto& v : d.vectors) vectors.push_back(v);
  j["spanning"] = strong_cp_rank_witness(d).spanning;
  j["weights_positive"] = d.weights_positive;
  return j;
}

}  // namespace

std::string decomposition_to_json(const CpDecomposition<BigRat>& d) {
  return decomposition_body(d).dump(2);
}

std::string decomposition_to_json(const CpDecomposition<double>& d) {
  return decomposition_body(d).dump(2);
}

std::string factorization_to_json(const GcdFactorization& f, const WeightScheme& scheme) {
  ordered j;
  j["order"] = f.diagonal.order();
  j["scheme"] = scheme.label();
  auto& set = j["set"] = ordered::array();
  for (std::uint64_t v : f.incidence.row_labels) set.push_back(v);
  auto& closure = j["closure"] = ordered::array();
  for (std::uint64_t v : f.incidence.col_labels) closure.push_back(v);
  auto& diag = j["diagonal"] = ordered::array();
  std::vector<std::size_t> idx(f.diagonal.order(), 0);
  for (std::size_t i = 0; i < f.diagonal.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    diag.push_back(format_int(f.diagonal.at(idx)));
  }
  auto& inc = j["incidence"] = ordered::array();
  for (std::size_t r = 0; r < f.incidence.base.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t c = 0; c < f.incidence.base.cols(); ++c) {
      row.push_back(f.incidence.base(r, c).convert_to<int>());
    }
    inc.push_back(std::move(row));
  }
  return j.dump(2);
}

namespace {

template <typename W>
std::string meet_factorization_body(const MeetFactorization<W>& f,
                                    const std::vector<std::string>& subset) {
  ordered j;
  j["order"] = f.identity.order;
  j["scheme"] = f.identity.scheme.label();
  j["set"] = subset;
  j["closure"] = f.closure;
  auto& diag = j["diagonal"] = ordered::array();
  for (const W& w : f.identity.weights) {
    if constexpr (std::is_same_v<W, BigRat>) {
      diag.push_back(format_rat(w));
    } else {
      diag.push_back(w);
    }
  }
  auto& inc = j["incidence"] = ordered::array();
  for (std::size_t r = 0; r < f.incidence.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t c = 0; c < f.incidence.cols(); ++c) {
      row.push_back(f.incidence(r, c) != 0 ? 1 : 0);
    }
    inc.push_back(std::move(row));
  }
  j["spanning"] = strong_cp_rank_witness(f.identity).spanning;
  j["weights_positive"] = f.identity.weights_positive;
  return j.dump(2);
}

}  // namespace

std::string meet_factorization_to_json(const MeetFactorization<BigRat>& f,
                                       const std::vector<std::string>& subset) {
  return meet_factorization_body(f, subset);
}

std::string meet_factorization_to_json(const MeetFactorization<double>& f,
                                       const std::vector<std::string>& subset) {
  return meet_factorization_body(f, subset);
}

namespace {

ordered det_report_body(const DetReport& r) {
  ordered j;
  j["method"] = to_string(r.method);
  auto& bases = j["bases"] = ordered::array();
  for (const BigRat& b : r.bases) bases.push_back(format_rat(b));
  j["exponent"] = format_int(r.exponent);
  if (r.expanded) j["value"] = format_rat(r.value);
  j["expanded"] = r.expanded;
  return j;
}

}  // namespace

std::string det_report_to_json(const DetReport& r) { return det_report_body(r).dump(2); }

std::string det_verification_to_json(const DetReport& closed, const DetReport& oracle,
                                     bool agreement) {
  ordered j;
  j["closed_form"] = det_report_body(closed);
  j["oracle"] = det_report_body(oracle);
  j["oracle_agreement"] = agreement;
  return j.dump(2);
}

std::string scan_report_to_json(const ScanReport& r) {
  ordered j;
  j["subset_size"] = r.subset_size;
  j["order"] = r.order;
  j["max_value"] = r.max_value;
  j["scanned"] = r.scanned;
  j["strict"] = r.strict;
  j["equal"] = r.equal;
  j["violations"] = r.violations;
  j["equality_iff_factor_closed"] = r.equality_iff_factor_closed;
  auto& ex = j["violation_examples"] = ordered::array();
  for (const auto& subset : r.violation_examples) ex.push_back(subset);
  return j.dump(2);
}

std::string positivity_report_to_json(const PositivityReport& r) {
  ordered j;
  j["verdict"] = r.witness_found ? "witness_found" : "no_violation_found";
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["witness_value"] = r.witness_value;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j.dump(2);
}

std::string extreme_result_to_json(const ExtremeFormResult& r) {
  ordered j;
  j["mode"] = r.mode == ExtremeMode::min ? "min" : "max";
  j["value"] = r.value;
  j["argmin_vector"] = r.argmin_vector;
  j["restarts"] = r.restarts;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  return j.dump(2);
}

LatticeSpec lattice_from_json(std::string_view text) {
  const json j = parse_checked(text);
  LatticeSpec spec;
  for (const json& e : field(j, "elements")) {
    if (!e.is_string()) throw std::invalid_argument("lattice elements must be strings");
    spec.elements.push_back(e.get<std::string>());
  }
  for (const json& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw std::invalid_argument("each pair must be a two-element array of labels");
    }
    spec.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  if (j.contains("g") && !j.at("g").is_null()) {
    const json& g = j.at("g");
    if (!g.is_object()) throw std::invalid_argument("'g' must map labels to values");
    spec.has_valuation = true;
    for (const auto& [key, val] : g.items()) {
      if (val.is_number_float()) spec.valuation_is_float = true;
    }
    for (const auto& [key, val] : g.items()) {
      if (spec.valuation_is_float) {
        if (!val.is_number()) {
          throw std::invalid_argument("mixed valuation: all values must be numbers once any is "
                                      "a non-integer number");
        }
        spec.float_valuation[key] = val.get<double>();
      } else if (val.is_string()) {
        spec.exact_valuation[key] = parse_rat(val.get<std::string>());
      } else if (val.is_number_integer()) {
        spec.exact_valuation[key] = BigRat(BigInt(val.get<long long>()));
      } else if (val.is_number_unsigned()) {
        spec.exact_valuation[key] = BigRat(BigInt(val.get<unsigned long long>()));
      } else {
        throw std::invalid_argument("valuation values must be strings or numbers");
      }
    }
  }
  return spec;
}

std::string lattice_summary_to_json(const MeetSemilattice& l) {
  ordered j;
  j["elements"] = l.elements();
  auto& meets = j["meets"] = ordered::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    ordered row = ordered::array();
    for (std::size_t b = 0; b < l.size(); ++b) row.push_back(l.label(l.meet(a, b)));
    meets.push_back(std::move(row));
  }
  return j.dump(2);
}

}  // namespace gcdt
