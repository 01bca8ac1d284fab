#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcdt/determinant.hpp"
#include "gcdt/gcd_tensor.hpp"

namespace gcdt {

/// Finite poset in which every pair has a unique greatest common lower bound.
/// Construction takes an arbitrary pair list, closes it reflexively and
/// transitively, then validates antisymmetry and the meet property eagerly so
/// every query below can assume a well-formed lattice.
class MeetSemilattice {
 public:
  static MeetSemilattice build(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& order_pairs);

  /// Positive integers ordered by divisibility; meets are gcds.
  static MeetSemilattice divisibility(const IntegerSet& values);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& elements() const { return labels_; }
  std::size_t index_of(const std::string& label) const;
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// a below-or-equal b.
  bool below(std::size_t a, std::size_t b) const { return below_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }

  std::string meet_many(const std::vector<std::string>& items) const;
  std::vector<std::string> meet_closure(const std::vector<std::string>& subset) const;
  bool is_meet_closed(const std::vector<std::string>& subset) const;

  /// Indices of the given labels; throws on unknown labels or duplicates.
  std::vector<std::size_t> indices_of(const std::vector<std::string>& subset) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::vector<std::size_t>> meet_;
};

template <typename T>
using Valuation = std::map<std::string, T>;

template <typename T>
struct PosetTotientTable {
  std::vector<std::string> domain;  // the subset, in its given order
  std::vector<T> values;

  const T& value(const std::string& label) const {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] == label) return values[i];
    }
    throw std::invalid_argument("no totient value for element '" + label + "'");
  }
};

/// Recursive totient with respect to a valuation: the value at s is g(s)
/// minus the values at the members of the subset strictly below s.
template <typename T>
PosetTotientTable<T> poset_totient(const MeetSemilattice& l, const std::vector<std::string>& s,
                                   const Valuation<T>& g);

extern template PosetTotientTable<BigRat> poset_totient(const MeetSemilattice&,
                                                        const std::vector<std::string>&,
                                                        const Valuation<BigRat>&);
extern template PosetTotientTable<double> poset_totient(const MeetSemilattice&,
                                                        const std::vector<std::string>&,
                                                        const Valuation<double>&);

/// Entry (i_1..i_m) is g applied to the meet of the selected elements.
template <typename T>
Tensor<T> build_meet_tensor(const MeetSemilattice& l, const std::vector<std::string>& s,
                            const Valuation<T>& g, std::size_t order);

extern template Tensor<BigRat> build_meet_tensor(const MeetSemilattice&,
                                                 const std::vector<std::string>&,
                                                 const Valuation<BigRat>&, std::size_t);
extern template Tensor<double> build_meet_tensor(const MeetSemilattice&,
                                                 const std::vector<std::string>&,
                                                 const Valuation<double>&, std::size_t);

/// Decomposition and factorization of a meet tensor over a meet-closed
/// superset f: weights are the recursive totients on f, vectors/columns the
/// below-incidence pattern. This is an algebraic identity; weights may be
/// negative or zero, so no positivity certificate is attached.
template <typename T>
struct MeetFactorization {
  CpDecomposition<T> identity;
  Tensor<T> diagonal;        // order-m diagonal of the totient values on f
  Matrix<BigInt> incidence;  // 0/1: element j of f below element i of s
  std::vector<std::string> closure;  // f, in the order used for columns
};

template <typename T>
MeetFactorization<T> meet_decompose_factorize(const MeetSemilattice& l,
                                              const std::vector<std::string>& s,
                                              const Valuation<T>& g, std::size_t order,
                                              const std::vector<std::string>& f);

extern template MeetFactorization<BigRat> meet_decompose_factorize(
    const MeetSemilattice&, const std::vector<std::string>&, const Valuation<BigRat>&, std::size_t,
    const std::vector<std::string>&);
extern template MeetFactorization<double> meet_decompose_factorize(
    const MeetSemilattice&, const std::vector<std::string>&, const Valuation<double>&, std::size_t,
    const std::vector<std::string>&);

/// Closed-form determinant on a meet-closed subset: product of the recursive
/// totients raised to (m-1)^(n-1). Exact valuations only.
DetReport det_closed_form_meet(const MeetSemilattice& l, const std::vector<std::string>& s,
                               const Valuation<BigRat>& g, std::size_t order);

}  // namespace gcdt
