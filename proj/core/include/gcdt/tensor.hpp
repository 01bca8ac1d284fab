#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcdt/scalar.hpp"

namespace gcdt {

// dense storage guard: product of extents may not exceed this
inline constexpr std::size_t max_tensor_entries = 10'000'000;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix with a zero extent");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Row r of the result is the perm[r]-th unit row vector, so multiplying a
  /// column x gives (x[perm[0]], x[perm[1]], ...).
  static Matrix permutation(const std::vector<std::size_t>& perm) {
    Matrix m(perm.size(), perm.size());
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t r = 0; r < perm.size(); ++r) {
      if (perm[r] >= perm.size() || hit[perm[r]]) {
        throw std::invalid_argument("not a permutation of 0..n-1");
      }
      hit[perm[r]] = true;
      m(r, perm[r]) = T(1);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Dense tensor in flat lexicographic layout, first index most significant.
/// Cubical tensors (all extents equal) model the symmetric-tensor spaces; mode
/// products may produce mixed extents, so the shape is a general vector.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    if (shape_.empty()) throw std::invalid_argument("tensor of order zero");
    std::size_t total = 1;
    for (std::size_t e : shape_) {
      if (e == 0) throw std::invalid_argument("tensor with a zero extent");
      if (e > max_tensor_entries / total) {
        throw std::invalid_argument("tensor exceeds the dense-storage guard of 10^7 entries");
      }
      total *= e;
    }
    data_.assign(total, T(0));
  }

  static Tensor cubic(std::size_t order, std::size_t dim) {
    if (order < 1) throw std::invalid_argument("tensor order must be at least 1");
    if (dim < 1) throw std::invalid_argument("tensor dimension must be at least 1");
    return Tensor(std::vector<std::size_t>(order, dim));
  }

  std::size_t order() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t extent(std::size_t mode) const { return shape_[mode]; }
  std::size_t size() const { return data_.size(); }
  bool cubical() const {
    return std::all_of(shape_.begin(), shape_.end(), [&](std::size_t e) { return e == shape_[0]; });
  }
  /// Shared extent of a cubical tensor.
  std::size_t dim() const {
    if (!cubical()) throw std::invalid_argument("dim() on a non-cubical tensor");
    return shape_[0];
  }

  std::size_t flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != shape_.size()) throw std::invalid_argument("index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= shape_[k]) throw std::invalid_argument("tensor index out of range");
      flat = flat * shape_[k] + idx[k];
    }
    return flat;
  }

  const T& at(const std::vector<std::size_t>& idx) const { return data_[flat_index(idx)]; }
  T& at(const std::vector<std::size_t>& idx) { return data_[flat_index(idx)]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }
  T& operator[](std::size_t flat) { return data_[flat]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Tensor& other) const = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<T> data_;
};

/// Advances idx through the given shape in flat order; false after the last index.
inline bool next_index(std::vector<std::size_t>& idx, const std::vector<std::size_t>& shape) {
  for (std::size_t k = shape.size(); k-- > 0;) {
    if (++idx[k] < shape[k]) return true;
    idx[k] = 0;
  }
  return false;
}

// ===== construction =====

template <typename T>
Tensor<T> outer_power(const std::vector<T>& v, std::size_t m) {
  if (m < 2) throw std::invalid_argument("outer power needs order at least 2");
  Tensor<T> out = Tensor<T>::cubic(m, v.size());
  std::vector<std::size_t> idx(m, 0);
  std::size_t flat = 0;
  do {
    T prod = v[idx[0]];
    for (std::size_t k = 1; k < m; ++k) prod *= v[idx[k]];
    out[flat++] = prod;
  } while (next_index(idx, out.shape()));
  return out;
}

template <typename T>
Tensor<T> make_diagonal(const std::vector<T>& d, std::size_t m) {
  if (m < 2) throw std::invalid_argument("diagonal tensor needs order at least 2");
  Tensor<T> out = Tensor<T>::cubic(m, d.size());
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    out.at(idx) = d[i];
  }
  return out;
}

// ===== mode products =====

/// Contracts mode k (1-based) of t against b: entry j of the new mode k is the
/// sum over i of b(j, i) times the mode-k slice i.
template <typename T>
Tensor<T> k_mode_product(const Tensor<T>& t, const Matrix<T>& b, std::size_t k) {
  if (k < 1 || k > t.order()) throw std::invalid_argument("mode index out of range");
  const std::size_t mode = k - 1;
  if (b.cols() != t.extent(mode)) {
    throw std::invalid_argument("mode product: matrix has " + std::to_string(b.cols()) +
                                " columns but mode extent is " + std::to_string(t.extent(mode)));
  }
  std::vector<std::size_t> out_shape = t.shape();
  out_shape[mode] = b.rows();
  Tensor<T> out(out_shape);

  std::vector<std::size_t> oidx(out_shape.size(), 0);
  std::vector<std::size_t> tidx(out_shape.size(), 0);
  std::size_t flat = 0;
  do {
    tidx = oidx;
    T acc(0);
    for (std::size_t i = 0; i < t.extent(mode); ++i) {
      tidx[mode] = i;
      acc += b(oidx[mode], i) * t.at(tidx);
    }
    out[flat++] = acc;
  } while (next_index(oidx, out_shape));
  return out;
}

/// Applies e on every mode of a cubical tensor.
template <typename T>
Tensor<T> multi_mode_product(const Tensor<T>& d, const Matrix<T>& e) {
  if (!d.cubical()) throw std::invalid_argument("multi-mode product needs a cubical tensor");
  if (e.cols() != d.dim()) {
    throw std::invalid_argument("multi-mode product: matrix columns must match tensor dimension");
  }
  Tensor<T> acc = d;
  for (std::size_t k = 1; k <= d.order(); ++k) acc = k_mode_product(acc, e, k);
  return acc;
}

/// Composition product of cubical tensors sharing a dimension: the result has
/// order (m-1)(k-1)+1 and reduces to the matrix product when m = k = 2.
template <typename T>
Tensor<T> general_product(const Tensor<T>& a, const Tensor<T>& b) {
  if (!a.cubical() || !b.cubical()) throw std::invalid_argument("composition product needs cubical tensors");
  if (a.order() < 2) throw std::invalid_argument("left factor must have order at least 2");
  if (a.dim() != b.dim()) throw std::invalid_argument("composition product: dimension mismatch");
  const std::size_t m = a.order(), k = b.order(), n = a.dim();
  const std::size_t out_order = (m - 1) * (k - 1) + 1;
  Tensor<T> out = Tensor<T>::cubic(out_order, n);

  // out(i, alpha_1, ..., alpha_{m-1}) with each alpha a (k-1)-block:
  //   sum over (i_2..i_m) of a(i, i_2, .., i_m) * prod_j b(i_j, alpha_{j-1})
  const std::vector<std::size_t> inner_shape(m - 1, n);
  std::vector<std::size_t> oidx(out_order, 0);
  std::vector<std::size_t> bidx(k, 0);
  std::size_t flat = 0;
  do {
    T acc(0);
    std::vector<std::size_t> inner(m - 1, 0);
    std::vector<std::size_t> aidx(m, 0);
    do {
      aidx[0] = oidx[0];
      std::copy(inner.begin(), inner.end(), aidx.begin() + 1);
      T term = a.at(aidx);
      for (std::size_t j = 0; j + 1 < m; ++j) {
        bidx[0] = inner[j];
        for (std::size_t q = 0; q + 1 < k; ++q) bidx[q + 1] = oidx[1 + j * (k - 1) + q];
        term *= b.at(bidx);
      }
      acc += term;
    } while (next_index(inner, inner_shape));
    out[flat++] = acc;
  } while (next_index(oidx, out.shape()));
  return out;
}

// ===== entrywise operations =====

template <typename T>
Tensor<T> hadamard(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("entrywise product: shape mismatch");
  Tensor<T> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

template <typename T, typename F>
auto entrywise_map(const Tensor<T>& a, F&& f) -> Tensor<decltype(f(a[0]))> {
  using R = decltype(f(a[0]));
  Tensor<R> out(a.shape());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i]);
  return out;
}

// ===== form evaluation =====

template <typename T>
struct FormEval {
  T value;                        // full contraction of the form at x
  std::vector<T> mode_contraction;  // the one-mode-left vector; for symmetric
                                    // input the gradient of the form is order * this
};

template <typename T>
FormEval<T> eval_form(const Tensor<T>& a, const std::vector<T>& x) {
  if (!a.cubical()) throw std::invalid_argument("form evaluation needs a cubical tensor");
  if (x.size() != a.dim()) throw std::invalid_argument("form evaluation: vector length mismatch");
  const std::size_t m = a.order();
  FormEval<T> out{T(0), std::vector<T>(a.dim(), T(0))};
  std::vector<std::size_t> idx(m, 0);
  std::size_t flat = 0;
  do {
    T prod = a[flat++];
    for (std::size_t k = 1; k < m; ++k) prod *= x[idx[k]];
    out.mode_contraction[idx[0]] += prod;
  } while (next_index(idx, a.shape()));
  for (std::size_t i = 0; i < x.size(); ++i) out.value += x[i] * out.mode_contraction[i];
  return out;
}

// ===== index symmetry =====

/// Relabels indices: entry (i_1..i_m) of the result is the entry
/// (perm[i_1]..perm[i_m]) of t. Matches rebuilding on a relabeled set.
template <typename T>
Tensor<T> permute_congruence(const Tensor<T>& t, const std::vector<std::size_t>& perm) {
  if (!t.cubical()) throw std::invalid_argument("index relabeling needs a cubical tensor");
  if (perm.size() != t.dim()) throw std::invalid_argument("permutation length mismatch");
  Matrix<int>::permutation(perm);  // validates bijectivity
  Tensor<T> out(t.shape());
  std::vector<std::size_t> idx(t.order(), 0);
  std::vector<std::size_t> src(t.order(), 0);
  std::size_t flat = 0;
  do {
    for (std::size_t k = 0; k < idx.size(); ++k) src[k] = perm[idx[k]];
    out[flat++] = t.at(src);
  } while (next_index(idx, t.shape()));
  return out;
}

template <typename T>
bool symmetry_check(const Tensor<T>& t) {
  if (!t.cubical()) return false;
  // every entry must equal the entry at its sorted index, which is equivalent
  // to invariance under all index permutations
  std::vector<std::size_t> idx(t.order(), 0);
  std::vector<std::size_t> canon(t.order(), 0);
  std::size_t flat = 0;
  do {
    canon = idx;
    std::sort(canon.begin(), canon.end());
    if (!(t[flat++] == t.at(canon))) return false;
  } while (next_index(idx, t.shape()));
  return true;
}

// ===== explicit scalar conversions (never implicit) =====

inline Tensor<BigRat> to_rational(const Tensor<BigInt>& t) {
  Tensor<BigRat> out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = BigRat(t[i]);
  return out;
}

inline Matrix<BigRat> to_rational(const Matrix<BigInt>& m) {
  Matrix<BigRat> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigRat(m(r, c));
  return out;
}

inline Tensor<double> to_float64(const Tensor<BigInt>& t) {
  Tensor<double> out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = to_double(t[i]);
  return out;
}

inline Tensor<double> to_float64(const Tensor<BigRat>& t) {
  Tensor<double> out(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = to_double(t[i]);
  return out;
}

}  // namespace gcdt
