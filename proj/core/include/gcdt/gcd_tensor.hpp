#pragma once

#include <string>
#include <vector>

#include "gcdt/numtheory.hpp"
#include "gcdt/tensor.hpp"

namespace gcdt {

/// 0/1 divisibility pattern: entry (i, j) is 1 exactly when col_labels[j]
/// divides row_labels[i].
struct IncidenceMatrix {
  Matrix<BigInt> base;
  IntegerSet row_labels;
  IntegerSet col_labels;
};

enum class SchemeKind {
  phi_factor_closed,   // weights are totients over the factor closure
  psi_gcd_closed,      // weights are recursive totients over the gcd closure
  multiplicative,      // weights are (g * mobius) over the factor closure
  fractional,          // weights are (p^r * mobius), float64
  meet_totient,        // lattice generalization: recursive totients w.r.t. a valuation
};

struct WeightScheme {
  SchemeKind kind = SchemeKind::phi_factor_closed;
  std::string g_name;   // multiplicative only
  double power = 0.0;   // fractional only

  std::string label() const;
};

/// Weighted sum of outer powers of 0/1 vectors. The weights_positive flag is
/// the positivity certificate: when false the decomposition is still an exact
/// algebraic identity but carries no claim about the sign of the weights.
template <typename W>
struct CpDecomposition {
  std::size_t order = 2;
  std::size_t dim = 0;
  WeightScheme scheme;
  std::vector<W> weights;
  std::vector<std::vector<int>> vectors;  // one 0/1 column of length dim per weight
  bool weights_positive = true;
};

struct RankWitness {
  std::size_t rank = 0;
  bool spanning = false;  // rank equals the ambient dimension
};

Tensor<BigInt> build_gcd_tensor(const IntegerSet& s, std::size_t order);

IncidenceMatrix incidence_matrix(const IntegerSet& s, const IntegerSet& f);

/// Decomposition of the gcd tensor on s with totient weights over the factor
/// closure (phi_factor_closed) or recursive-totient weights over the gcd
/// closure (psi_gcd_closed).
CpDecomposition<BigRat> scp_decompose(const IntegerSet& s, std::size_t order, SchemeKind kind);

/// Decomposition of the entrywise g-transform with weights (g * mobius) over
/// the factor closure. Nonpositive weights only clear weights_positive.
CpDecomposition<BigRat> scp_decompose_multiplicative(const IntegerSet& s, std::size_t order,
                                                     const ArithmeticFn& g, std::string g_name);

/// Decomposition of the entrywise r-th power, weights (p^r * mobius) in
/// float64. Exact-zero weights are dropped (r = 0 collapses to one term).
CpDecomposition<double> scp_decompose_fractional(const IntegerSet& s, std::size_t order, double r);

template <typename W>
Tensor<W> reconstruct(const CpDecomposition<W>& d) {
  Tensor<W> acc = Tensor<W>::cubic(d.order, d.dim);
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    std::vector<W> col(d.dim);
    for (std::size_t i = 0; i < d.dim; ++i) col[i] = W(d.vectors[k][i]);
    Tensor<W> pw = outer_power(col, d.order);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += d.weights[k] * pw[i];
  }
  return acc;
}

/// Exact rank over the rationals of the vectors carrying a nonzero weight.
template <typename W>
RankWitness strong_cp_rank_witness(const CpDecomposition<W>& d);

struct GcdFactorization {
  Tensor<BigInt> diagonal;  // order-m diagonal of the scheme weights
  IncidenceMatrix incidence;
};

/// Diagonal-times-incidence factorization: applying the incidence matrix on
/// every mode of the diagonal reproduces the gcd tensor exactly.
GcdFactorization factorize(const IntegerSet& s, std::size_t order, SchemeKind kind);

/// Entrywise g over the gcd tensor, exact.
Tensor<BigRat> multiplicative_transform(const IntegerSet& s, std::size_t order,
                                        const ArithmeticFn& g);

}  // namespace gcdt
