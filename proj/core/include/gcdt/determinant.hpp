#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcdt/gcd_tensor.hpp"

namespace gcdt {

/// Exact determinant by fraction-free (Bareiss) elimination. Works for exact
/// integer and exact rational entries; division steps are exact by construction.
template <typename T>
T det_matrix_exact(Matrix<T> m);

extern template BigInt det_matrix_exact(Matrix<BigInt>);
extern template BigRat det_matrix_exact(Matrix<BigRat>);

Matrix<BigInt> tensor_as_matrix(const Tensor<BigInt>& t);
Matrix<BigRat> tensor_as_matrix(const Tensor<BigRat>& t);
Tensor<BigInt> matrix_as_tensor(const Matrix<BigInt>& m);

/// One homogeneous form of degree m-1 per leading index: form k collects the
/// tensor entries t(k, i2, ..., im) as coefficients of x_{i2} ... x_{im}.
template <typename T>
struct PolynomialSystem {
  std::size_t nvars = 0;
  std::size_t degree = 0;
  // exponent multi-index (length nvars, entries summing to degree) -> coefficient
  std::vector<std::map<std::vector<std::size_t>, T>> forms;
};

template <typename T>
PolynomialSystem<T> polynomial_system(const Tensor<T>& t);

extern template PolynomialSystem<BigInt> polynomial_system(const Tensor<BigInt>&);
extern template PolynomialSystem<BigRat> polynomial_system(const Tensor<BigRat>&);

/// Resultant of two binary forms given by coefficient sequences in descending
/// powers of the first variable. Pinned convention: the Sylvester matrix lists
/// the first form's shifted rows first, then the second form's; for two linear
/// forms this is the plain 2x2 determinant.
template <typename T>
T sylvester_resultant(const std::vector<T>& f, const std::vector<T>& g);

extern template BigInt sylvester_resultant(const std::vector<BigInt>&, const std::vector<BigInt>&);
extern template BigRat sylvester_resultant(const std::vector<BigRat>&, const std::vector<BigRat>&);

enum class DetMethod {
  closed_form_phi,
  closed_form_psi,
  closed_form_multiplicative,
  matrix_bareiss,
  sylvester_resultant,
};

std::string to_string(DetMethod m);

/// Determinant plus the method that produced it. Closed forms carry the factored shape
/// (product of bases, each raised to (m-1)^(n-1)); the value is expanded only
/// while it stays within a fixed size guard, tracked by `expanded`.
struct DetReport {
  DetMethod method = DetMethod::matrix_bareiss;
  std::vector<BigRat> bases;  // closed forms only; empty for oracles
  BigInt exponent = 1;        // (m-1)^(n-1)
  BigRat value = 0;           // meaningful only when expanded
  bool expanded = false;
};

/// Assembles a closed-form report: records the bases, fills the exponent, and
/// expands the product only while it stays within the size guard.
DetReport make_closed_form_report(std::vector<BigRat> bases, std::size_t order, std::size_t n,
                                  DetMethod method);

/// Brute-force determinant in the supported regimes: order 2 via Bareiss, or
/// dimension 2 via the resultant of the two associated binary forms. Anything
/// else is refused, never approximated.
DetReport tensor_det_oracle(const Tensor<BigInt>& t);
DetReport tensor_det_oracle(const Tensor<BigRat>& t);

/// Closed-form determinant of the gcd tensor on s (phi/psi schemes).
DetReport det_closed_form(const IntegerSet& s, std::size_t order, SchemeKind kind);

/// Closed-form determinant of the entrywise g-transform on factor-closed s:
/// product of (g * mobius)(s_i) raised to the usual exponent.
DetReport det_closed_form_multiplicative(const IntegerSet& s, std::size_t order,
                                         const ArithmeticFn& g);

struct ScanReport {
  std::size_t subset_size = 0;
  std::size_t order = 0;
  std::uint64_t max_value = 0;
  std::uint64_t scanned = 0;
  std::uint64_t strict = 0;
  std::uint64_t equal = 0;
  std::uint64_t violations = 0;
  bool equality_iff_factor_closed = true;
  std::vector<std::vector<std::uint64_t>> violation_examples;  // at most 5 kept
};

/// Exhaustive sweep over all size-n subsets of {1..max_value}: checks the
/// oracle determinant against the totient-product lower bound and records
/// whether equality happens exactly on factor-closed subsets.
ScanReport conjecture_scan(std::size_t n, std::size_t order, std::uint64_t max_value);

}  // namespace gcdt
