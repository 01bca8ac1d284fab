#include "gcdt/gcd_tensor.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcdt {

std::string WeightScheme::label() const {
  switch (kind) {
    case SchemeKind::phi_factor_closed:
      return "phi_factor_closed";
    case SchemeKind::psi_gcd_closed:
      return "psi_gcd_closed";
    case SchemeKind::multiplicative:
      return "multiplicative(" + g_name + ")";
    case SchemeKind::fractional: {
      // shortest round-trip decimal for the exponent
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), power);
      (void)ec;
      return "fractional(" + std::string(buf, end) + ")";
    }
    case SchemeKind::meet_totient:
      return "meet_totient";
  }
  return "unknown";
}

Tensor<BigInt> build_gcd_tensor(const IntegerSet& s, std::size_t order) {
  if (order < 2) throw std::invalid_argument("gcd tensor needs order at least 2");
  if (s.empty()) throw std::invalid_argument("gcd tensor of an empty set");
  Tensor<BigInt> out = Tensor<BigInt>::cubic(order, s.size());
  std::vector<std::size_t> idx(order, 0);
  std::size_t flat = 0;
  do {
    std::uint64_t g = 0;
    for (std::size_t k : idx) g = std::gcd(g, s[k]);
    out[flat++] = BigInt(g);
  } while (next_index(idx, out.shape()));
  return out;
}

IncidenceMatrix incidence_matrix(const IntegerSet& s, const IntegerSet& f) {
  for (std::uint64_t v : s) {
    if (!f.contains(v)) {
      throw std::invalid_argument("incidence matrix: element " + std::to_string(v) +
                                  " of the row set is missing from the column set");
    }
  }
  Matrix<BigInt> base(s.size(), f.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) base(i, j) = (s[i] % f[j] == 0) ? 1 : 0;
  return IncidenceMatrix{std::move(base), s, f};
}

namespace {

CpDecomposition<BigRat> assemble_exact(const IntegerSet& s, std::size_t order,
                                       const IntegerSet& f, std::vector<BigRat> weights,
                                       WeightScheme scheme) {
  IncidenceMatrix e = incidence_matrix(s, f);
  CpDecomposition<BigRat> d;
  d.order = order;
  d.dim = s.size();
  d.scheme = std::move(scheme);
  d.weights = std::move(weights);
  d.vectors.resize(f.size(), std::vector<int>(s.size(), 0));
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t i = 0; i < s.size(); ++i)
      d.vectors[k][i] = static_cast<int>(e.base(i, k).convert_to<int>());
  for (const BigRat& w : d.weights) {
    if (w <= 0) {
      d.weights_positive = false;
      break;
    }
  }
  return d;
}

}  // namespace

CpDecomposition<BigRat> scp_decompose(const IntegerSet& s, std::size_t order, SchemeKind kind) {
  if (order < 2) throw std::invalid_argument("decomposition needs order at least 2");
  if (kind == SchemeKind::phi_factor_closed) {
    IntegerSet f = factor_closure(s);
    std::vector<BigRat> w;
    w.reserve(f.size());
    for (std::uint64_t v : f) w.emplace_back(BigInt(euler_phi(v)));
    return assemble_exact(s, order, f, std::move(w), WeightScheme{kind, "", 0.0});
  }
  if (kind == SchemeKind::psi_gcd_closed) {
    IntegerSet f = gcd_closure(s);
    ArithmeticTable psi = generalized_totient(f);
    return assemble_exact(s, order, f, psi.values(), WeightScheme{kind, "", 0.0});
  }
  throw std::invalid_argument("scheme requires the dedicated entry point");
}

CpDecomposition<BigRat> scp_decompose_multiplicative(const IntegerSet& s, std::size_t order,
                                                     const ArithmeticFn& g, std::string g_name) {
  if (order < 2) throw std::invalid_argument("decomposition needs order at least 2");
  if (!g) throw std::invalid_argument("undefined weight function");
  IntegerSet f = factor_closure(s);
  std::vector<BigRat> w;
  w.reserve(f.size());
  for (std::uint64_t v : f) w.push_back(dirichlet_convolve(g, mobius_fn(), v));
  return assemble_exact(s, order, f, std::move(w),
                        WeightScheme{SchemeKind::multiplicative, std::move(g_name), 0.0});
}

CpDecomposition<double> scp_decompose_fractional(const IntegerSet& s, std::size_t order,
                                                 double r) {
  if (order < 2) throw std::invalid_argument("decomposition needs order at least 2");
  if (!(r >= 0.0)) throw std::invalid_argument("fractional power must be nonnegative");
  IntegerSet f = factor_closure(s);
  IncidenceMatrix e = incidence_matrix(s, f);

  CpDecomposition<double> d;
  d.order = order;
  d.dim = s.size();
  d.scheme = WeightScheme{SchemeKind::fractional, "", r};
  for (std::size_t k = 0; k < f.size(); ++k) {
    // (p^r * mobius)(f_k), evaluated in float64
    double w = 0.0;
    for (std::uint64_t dd : divisors(f[k])) {
      const int mu = mobius(dd);
      if (mu != 0) w += mu * std::pow(static_cast<double>(f[k] / dd), r);
    }
    if (w == 0.0) continue;  // exact zeros contribute nothing; drop the term
    if (w < 0.0) d.weights_positive = false;
    d.weights.push_back(w);
    std::vector<int> col(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) col[i] = e.base(i, k).convert_to<int>();
    d.vectors.push_back(std::move(col));
  }
  return d;
}

namespace {

// Rank over the rationals of an integer matrix with rows = dim, via
// fraction-free elimination. Rows stay at most dim, so growth is tame.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
  std::size_t rank = 0;
  std::size_t col = 0;
  while (rank < rows.size() && col < cols) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const BigInt a = rows[rank][col], b = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace

template <typename W>
RankWitness strong_cp_rank_witness(const CpDecomposition<W>& d) {
  // only vectors that actually appear (nonzero weight) can contribute to span
  std::vector<std::vector<BigInt>> rows(d.dim);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    if (d.weights[k] == W(0)) continue;
    ++cols;
  }
  for (auto& r : rows) r.assign(std::max<std::size_t>(cols, 1), 0);
  std::size_t c = 0;
  for (std::size_t k = 0; k < d.weights.size(); ++k) {
    if (d.weights[k] == W(0)) continue;
    for (std::size_t i = 0; i < d.dim; ++i) rows[i][c] = d.vectors[k][i];
    ++c;
  }
  RankWitness w;
  w.rank = cols == 0 ? 0 : integer_rank(std::move(rows), cols);
  w.spanning = (w.rank == d.dim);
  return w;
}

template RankWitness strong_cp_rank_witness(const CpDecomposition<BigRat>&);
template RankWitness strong_cp_rank_witness(const CpDecomposition<double>&);

GcdFactorization factorize(const IntegerSet& s, std::size_t order, SchemeKind kind) {
  if (order < 2) throw std::invalid_argument("factorization needs order at least 2");
  if (kind != SchemeKind::phi_factor_closed && kind != SchemeKind::psi_gcd_closed) {
    throw std::invalid_argument("factorization supports the totient schemes only");
  }
  const IntegerSet f =
      kind == SchemeKind::phi_factor_closed ? factor_closure(s) : gcd_closure(s);
  std::vector<BigInt> diag;
  diag.reserve(f.size());
  if (kind == SchemeKind::phi_factor_closed) {
    for (std::uint64_t v : f) diag.emplace_back(euler_phi(v));
  } else {
    ArithmeticTable psi = generalized_totient(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const BigRat& val = psi[i];
      if (boost::multiprecision::denominator(val) != 1) {
        throw std::runtime_error("recursive totient produced a non-integer");  // unreachable
      }
      diag.push_back(boost::multiprecision::numerator(val));
    }
  }
  return GcdFactorization{make_diagonal(diag, order), incidence_matrix(s, f)};
}

Tensor<BigRat> multiplicative_transform(const IntegerSet& s, std::size_t order,
                                        const ArithmeticFn& g) {
  if (!g) throw std::invalid_argument("undefined transform function");
  Tensor<BigInt> t = build_gcd_tensor(s, order);
  Tensor<BigRat> out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = g(t[i].convert_to<std::uint64_t>());
  return out;
}

}  // namespace gcdt
