#include "gcdt/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcdt {

template <typename T>
T det_matrix_exact(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == T(0)) ++pivot;
      if (pivot == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

template BigInt det_matrix_exact(Matrix<BigInt>);
template BigRat det_matrix_exact(Matrix<BigRat>);

namespace {

template <typename T>
Matrix<T> as_matrix(const Tensor<T>& t) {
  if (t.order() != 2) throw std::invalid_argument("matrix view of a tensor of order != 2");
  Matrix<T> m(t.extent(0), t.extent(1));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = t.at({r, c});
  return m;
}

}  // namespace

Matrix<BigInt> tensor_as_matrix(const Tensor<BigInt>& t) { return as_matrix(t); }
Matrix<BigRat> tensor_as_matrix(const Tensor<BigRat>& t) { return as_matrix(t); }

Tensor<BigInt> matrix_as_tensor(const Matrix<BigInt>& m) {
  Tensor<BigInt> t({m.rows(), m.cols()});
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.at({r, c}) = m(r, c);
  return t;
}

template <typename T>
PolynomialSystem<T> polynomial_system(const Tensor<T>& t) {
  if (!t.cubical()) throw std::invalid_argument("polynomial system needs a cubical tensor");
  if (t.order() < 2) throw std::invalid_argument("polynomial system needs order at least 2");
  if (!symmetry_check(t)) throw std::invalid_argument("polynomial system needs a symmetric tensor");
  PolynomialSystem<T> sys;
  sys.nvars = t.dim();
  sys.degree = t.order() - 1;
  sys.forms.resize(sys.nvars);

  std::vector<std::size_t> idx(t.order(), 0);
  std::size_t flat = 0;
  do {
    const T& coeff = t[flat++];
    if (coeff == T(0)) continue;
    std::vector<std::size_t> expo(sys.nvars, 0);
    for (std::size_t k = 1; k < idx.size(); ++k) ++expo[idx[k]];
    sys.forms[idx[0]][expo] += coeff;
  } while (next_index(idx, t.shape()));
  return sys;
}

template PolynomialSystem<BigInt> polynomial_system(const Tensor<BigInt>&);
template PolynomialSystem<BigRat> polynomial_system(const Tensor<BigRat>&);

template <typename T>
T sylvester_resultant(const std::vector<T>& f, const std::vector<T>& g) {
  if (f.size() < 2 || g.size() < 2) {
    throw std::invalid_argument("resultant needs two forms of degree at least 1");
  }
  const std::size_t d = f.size() - 1, e = g.size() - 1;
  Matrix<T> syl(d + e, d + e);
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t c = 0; c <= d; ++c) syl(r, r + c) = f[c];
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c <= e; ++c) syl(e + r, r + c) = g[c];
  return det_matrix_exact(std::move(syl));
}

template BigInt sylvester_resultant(const std::vector<BigInt>&, const std::vector<BigInt>&);
template BigRat sylvester_resultant(const std::vector<BigRat>&, const std::vector<BigRat>&);

std::string to_string(DetMethod m) {
  switch (m) {
    case DetMethod::closed_form_phi:
      return "closed_form_phi";
    case DetMethod::closed_form_psi:
      return "closed_form_psi";
    case DetMethod::closed_form_multiplicative:
      return "closed_form_multiplicative";
    case DetMethod::matrix_bareiss:
      return "matrix_bareiss";
    case DetMethod::sylvester_resultant:
      return "sylvester_resultant";
  }
  return "unknown";
}

namespace {

// expansion guard: expanded values are capped at ~2^16 bits so closed forms on
// large sets stay in factored shape instead of producing megabyte integers
constexpr std::uint64_t max_expanded_bits = 1u << 16;

std::uint64_t bit_size(const BigInt& v) {
  return v == 0 ? 1 : static_cast<std::uint64_t>(boost::multiprecision::msb(abs(v)) + 1);
}

}  // namespace

DetReport make_closed_form_report(std::vector<BigRat> bases, std::size_t order, std::size_t n,
                                  DetMethod method) {
  DetReport r;
  r.method = method;
  r.bases = std::move(bases);
  r.exponent = ipow(BigInt(order - 1), n >= 1 ? n - 1 : 0);

  bool zero_base = false;
  std::uint64_t bits_per_factor = 0;
  for (const BigRat& b : r.bases) {
    if (b == 0) zero_base = true;
    bits_per_factor += bit_size(boost::multiprecision::numerator(b)) +
                       bit_size(boost::multiprecision::denominator(b));
  }
  if (zero_base) {
    r.value = 0;
    r.expanded = true;
    return r;
  }
  if (r.exponent <= max_expanded_bits &&
      bits_per_factor * r.exponent.convert_to<std::uint64_t>() <= max_expanded_bits) {
    const std::uint64_t e = r.exponent.convert_to<std::uint64_t>();
    BigRat value = 1;
    for (const BigRat& b : r.bases) value *= ratpow(b, e);
    r.value = std::move(value);
    r.expanded = true;
  }
  return r;
}

namespace {

template <typename T>
DetReport oracle_impl(const Tensor<T>& t) {
  if (!t.cubical()) throw std::invalid_argument("determinant of a non-cubical tensor");
  const std::size_t m = t.order(), n = t.dim();
  DetReport r;
  r.exponent = ipow(BigInt(m - 1), n >= 1 ? n - 1 : 0);
  r.expanded = true;
  if (m == 2) {
    r.method = DetMethod::matrix_bareiss;
    r.value = BigRat(det_matrix_exact(as_matrix(t)));
    return r;
  }
  if (n == 2) {
    r.method = DetMethod::sylvester_resultant;
    PolynomialSystem<T> sys = polynomial_system(t);
    std::vector<std::vector<T>> coeffs(2, std::vector<T>(sys.degree + 1, T(0)));
    for (std::size_t k = 0; k < 2; ++k) {
      for (const auto& [expo, c] : sys.forms[k]) coeffs[k][expo[1]] = c;
    }
    r.value = BigRat(sylvester_resultant(coeffs[0], coeffs[1]));
    return r;
  }
  if (n == 1) {
    // single form c * x^(m-1): the determinant degenerates to its coefficient
    r.method = DetMethod::sylvester_resultant;
    r.value = BigRat(t[0]);
    return r;
  }
  throw std::invalid_argument(
      "determinant oracle supports order 2 or dimension <= 2 only; higher regimes are refused");
}

}  // namespace

DetReport tensor_det_oracle(const Tensor<BigInt>& t) { return oracle_impl(t); }
DetReport tensor_det_oracle(const Tensor<BigRat>& t) { return oracle_impl(t); }

DetReport det_closed_form(const IntegerSet& s, std::size_t order, SchemeKind kind) {
  if (order < 2) throw std::invalid_argument("determinant needs order at least 2");
  if (s.empty()) throw std::invalid_argument("determinant of an empty set");
  std::vector<BigRat> bases;
  bases.reserve(s.size());
  DetMethod method;
  if (kind == SchemeKind::phi_factor_closed) {
    require_factor_closed(s);
    for (std::uint64_t v : s) bases.emplace_back(BigInt(euler_phi(v)));
    method = DetMethod::closed_form_phi;
  } else if (kind == SchemeKind::psi_gcd_closed) {
    require_gcd_closed(s);
    ArithmeticTable psi = generalized_totient(s);
    bases = psi.values();
    method = DetMethod::closed_form_psi;
  } else {
    throw std::invalid_argument("closed form supports the totient schemes only");
  }
  return make_closed_form_report(std::move(bases), order, s.size(), method);
}

DetReport det_closed_form_multiplicative(const IntegerSet& s, std::size_t order,
                                         const ArithmeticFn& g) {
  if (order < 2) throw std::invalid_argument("determinant needs order at least 2");
  if (s.empty()) throw std::invalid_argument("determinant of an empty set");
  if (!g) throw std::invalid_argument("undefined weight function");
  require_factor_closed(s);
  std::vector<BigRat> bases;
  bases.reserve(s.size());
  for (std::uint64_t v : s) bases.push_back(dirichlet_convolve(g, mobius_fn(), v));
  return make_closed_form_report(std::move(bases), order, s.size(),
                            DetMethod::closed_form_multiplicative);
}

ScanReport conjecture_scan(std::size_t n, std::size_t order, std::uint64_t max_value) {
  const bool matrix_regime = order == 2 && n >= 1 && n <= 8;
  const bool binary_regime = n == 2 && order >= 2 && order <= 6;
  if (!matrix_regime && !binary_regime) {
    throw std::invalid_argument("scan regime unsupported: need order 2 (n <= 8) or n = 2 (order <= 6)");
  }
  if (max_value < n) throw std::invalid_argument("scan bound smaller than the subset size");

  ScanReport rep;
  rep.subset_size = n;
  rep.order = order;
  rep.max_value = max_value;
  const std::uint64_t expo = ipow(BigInt(order - 1), n - 1).convert_to<std::uint64_t>();

  std::vector<std::uint64_t> subset(n);
  for (std::size_t i = 0; i < n; ++i) subset[i] = i + 1;
  while (true) {
    IntegerSet s{std::vector<std::uint64_t>(subset)};
    const BigRat det = tensor_det_oracle(build_gcd_tensor(s, order)).value;
    BigInt bound = 1;
    for (std::uint64_t v : subset) bound *= ipow(BigInt(euler_phi(v)), expo);
    ++rep.scanned;

    const bool factor_closed = classify_set(s).factor_closed;
    if (det < BigRat(bound)) {
      ++rep.violations;
      if (rep.violation_examples.size() < 5) rep.violation_examples.push_back(subset);
    } else if (det == BigRat(bound)) {
      ++rep.equal;
      if (!factor_closed) rep.equality_iff_factor_closed = false;
    } else {
      ++rep.strict;
      if (factor_closed) rep.equality_iff_factor_closed = false;
    }

    // next ascending combination from {1..max_value}
    std::size_t k = n;
    while (k > 0 && subset[k - 1] == max_value - (n - k)) --k;
    if (k == 0) break;
    ++subset[k - 1];
    for (std::size_t j = k; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
  return rep;
}

}  // namespace gcdt
