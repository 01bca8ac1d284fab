#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gcdt/tensor.hpp"

using namespace gcdt;

namespace {

Tensor<BigInt> random_symmetric(std::size_t order, std::size_t dim, std::mt19937_64& eng) {
  Tensor<BigInt> t = Tensor<BigInt>::cubic(order, dim);
  std::vector<std::size_t> idx(order, 0);
  do {
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == idx) t.at(idx) = BigInt(static_cast<int>(eng() % 9) - 4);
  } while (next_index(idx, t.shape()));
  // mirror the canonical entries everywhere
  std::fill(idx.begin(), idx.end(), 0);
  do {
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    t.at(idx) = t.at(sorted);
  } while (next_index(idx, t.shape()));
  return t;
}

Matrix<BigInt> random_matrix(std::size_t n, std::mt19937_64& eng) {
  Matrix<BigInt> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = BigInt(static_cast<int>(eng() % 9) - 4);
  }
  return m;
}

}  // namespace

TEST_CASE("flat layout has the leading index most significant") {
  Tensor<BigInt> t = Tensor<BigInt>::cubic(2, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) t.at({i, j}) = BigInt(10 * i + j);
  }
  CHECK(t[0] == BigInt(0));
  CHECK(t[1] == BigInt(1));   // (0,1) right after (0,0)
  CHECK(t[3] == BigInt(10));  // (1,0)
  CHECK(t.size() == 9);
  CHECK_THROWS_AS(t.at({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(t.at({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("odometer walks all indices in layout order") {
  std::vector<std::size_t> idx{0, 0};
  const std::vector<std::size_t> shape{2, 3};
  std::size_t count = 1;
  while (next_index(idx, shape)) ++count;
  CHECK(count == 6);
  CHECK(idx == std::vector<std::size_t>{0, 0});  // wrapped around
}

TEST_CASE("size guard rejects huge dense tensors") {
  CHECK_THROWS_AS(Tensor<double>::cubic(8, 10), std::invalid_argument);  // 10^8 entries
  CHECK_NOTHROW(Tensor<double>::cubic(2, 100));
}

TEST_CASE("outer power") {
  Tensor<BigInt> t = outer_power(std::vector<BigInt>{BigInt(1), BigInt(2)}, 3);
  CHECK(t.at({0, 0, 0}) == BigInt(1));
  CHECK(t.at({1, 0, 1}) == BigInt(4));
  CHECK(t.at({1, 1, 1}) == BigInt(8));
  CHECK(symmetry_check(t));
  CHECK_THROWS_AS(outer_power(std::vector<BigInt>{BigInt(1)}, 1), std::invalid_argument);
}

TEST_CASE("mode product against a frozen hand computation") {
  // diag(2,3) times the swap matrix on mode 1: rows get permuted
  Tensor<BigInt> d = make_diagonal(std::vector<BigInt>{BigInt(2), BigInt(3)}, 2);
  Matrix<BigInt> swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  Tensor<BigInt> out = k_mode_product(d, swap, 1);
  CHECK(out.at({0, 0}) == BigInt(0));
  CHECK(out.at({0, 1}) == BigInt(3));
  CHECK(out.at({1, 0}) == BigInt(2));
  CHECK(out.at({1, 1}) == BigInt(0));

  CHECK_THROWS_AS(k_mode_product(d, swap, 0), std::invalid_argument);
  CHECK_THROWS_AS(k_mode_product(d, swap, 3), std::invalid_argument);
  CHECK_THROWS_AS(k_mode_product(d, Matrix<BigInt>(2, 3), 1), std::invalid_argument);
}

TEST_CASE("multi-mode product with the identity is a no-op") {
  std::mt19937_64 eng(7);
  Tensor<BigInt> t = random_symmetric(3, 3, eng);
  CHECK(multi_mode_product(t, Matrix<BigInt>::identity(3)) == t);
}

TEST_CASE("composition product at matrix order is the matrix product") {
  std::mt19937_64 eng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix<BigInt> a = random_matrix(3, eng);
    Matrix<BigInt> b = random_matrix(3, eng);
    Tensor<BigInt> ta = Tensor<BigInt>::cubic(2, 3);
    Tensor<BigInt> tb = Tensor<BigInt>::cubic(2, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        ta.at({i, j}) = a(i, j);
        tb.at({i, j}) = b(i, j);
      }
    }
    Tensor<BigInt> prod = general_product(ta, tb);
    REQUIRE(prod.order() == 2);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        BigInt want = 0;
        for (std::size_t k = 0; k < 3; ++k) want += a(i, k) * b(k, j);
        REQUIRE(prod.at({i, j}) == want);
      }
    }
  }
}

TEST_CASE("composition product order arithmetic") {
  Tensor<BigInt> a = Tensor<BigInt>::cubic(3, 2);  // m = 3
  Tensor<BigInt> b = Tensor<BigInt>::cubic(2, 2);  // k = 2
  CHECK(general_product(a, b).order() == 3);       // (m-1)(k-1)+1

  // right factor of order 1 contracts everything down to a vector
  Tensor<BigInt> v = Tensor<BigInt>::cubic(1, 2);
  v[0] = 1;
  v[1] = 2;
  Tensor<BigInt> aa = Tensor<BigInt>::cubic(2, 2);
  aa.at({0, 0}) = 1;
  aa.at({0, 1}) = 2;
  aa.at({1, 0}) = 3;
  aa.at({1, 1}) = 4;
  Tensor<BigInt> av = general_product(aa, v);
  REQUIRE(av.order() == 1);
  CHECK(av[0] == BigInt(5));   // 1*1 + 2*2
  CHECK(av[1] == BigInt(11));  // 3*1 + 4*2

  CHECK_THROWS_AS(general_product(v, aa), std::invalid_argument);  // left needs order >= 2
  Tensor<BigInt> wrong_dim = Tensor<BigInt>::cubic(2, 3);
  CHECK_THROWS_AS(general_product(aa, wrong_dim), std::invalid_argument);
}

TEST_CASE("congruence transform agrees with the two-sided composition") {
  // multi-mode by Q == composing Q on the left and Q^T on the right
  std::mt19937_64 eng(23);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 2; m <= 4; ++m) {
      Tensor<BigInt> a = random_symmetric(m, n, eng);
      Matrix<BigInt> q = random_matrix(n, eng);
      Tensor<BigInt> tq = Tensor<BigInt>::cubic(2, n);
      Tensor<BigInt> tqt = Tensor<BigInt>::cubic(2, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          tq.at({i, j}) = q(i, j);
          tqt.at({i, j}) = q(j, i);
        }
      }
      Tensor<BigInt> left = multi_mode_product(a, q);
      Tensor<BigInt> right = general_product(general_product(tq, a), tqt);
      REQUIRE(left == right);
    }
  }
}

TEST_CASE("hadamard product algebra") {
  std::mt19937_64 eng(31);
  Tensor<BigInt> a = random_symmetric(3, 2, eng);
  Tensor<BigInt> b = random_symmetric(3, 2, eng);
  Tensor<BigInt> c = random_symmetric(3, 2, eng);
  CHECK(hadamard(a, b) == hadamard(b, a));
  CHECK(hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c)));

  Tensor<BigInt> ones = Tensor<BigInt>::cubic(3, 2);
  for (std::size_t i = 0; i < ones.size(); ++i) ones[i] = 1;
  CHECK(hadamard(a, ones) == a);

  Tensor<BigInt> other_shape = Tensor<BigInt>::cubic(3, 3);
  CHECK_THROWS_AS(hadamard(a, other_shape), std::invalid_argument);
}

TEST_CASE("entrywise map with the identity function") {
  std::mt19937_64 eng(37);
  Tensor<BigInt> a = random_symmetric(2, 3, eng);
  CHECK(entrywise_map(a, [](const BigInt& v) { return v; }) == a);
}

TEST_CASE("form evaluation on a frozen matrix example") {
  Tensor<BigInt> t = Tensor<BigInt>::cubic(2, 2);
  t.at({0, 0}) = 4;
  t.at({0, 1}) = 2;
  t.at({1, 0}) = 2;
  t.at({1, 1}) = 6;
  FormEval<BigInt> ev = eval_form(t, {BigInt(1), BigInt(1)});
  CHECK(ev.value == BigInt(14));
  CHECK(ev.mode_contraction == std::vector<BigInt>{BigInt(6), BigInt(8)});

  CHECK_THROWS_AS(eval_form(t, std::vector<BigInt>{BigInt(1)}), std::invalid_argument);
}

TEST_CASE("form gradient matches central finite differences") {
  std::mt19937_64 eng(41);
  auto uniform = [&]() { return (eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  const double h = 1e-5;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t m = 2; m <= 4; ++m) {
      Tensor<BigInt> ti = random_symmetric(m, n, eng);
      Tensor<double> t = to_float64(ti);
      std::vector<double> x(n);
      for (auto& xi : x) xi = uniform() + 2.0;  // keep away from zero
      FormEval<double> ev = eval_form(t, x);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fd = (eval_form(t, xp).value - eval_form(t, xm).value) / (2 * h);
        const double grad = static_cast<double>(m) * ev.mode_contraction[i];
        const double scale = std::max({1.0, std::fabs(fd), std::fabs(grad)});
        REQUIRE(std::fabs(fd - grad) / scale <= 1e-6);
      }
    }
  }
}

TEST_CASE("congruence permutation relabels indices") {
  std::mt19937_64 eng(43);
  Tensor<BigInt> t = random_symmetric(3, 3, eng);
  const std::vector<std::size_t> perm{2, 0, 1};
  Tensor<BigInt> p = permute_congruence(t, perm);
  CHECK(p.at({0, 1, 2}) == t.at({2, 0, 1}));
  CHECK(p.at({1, 1, 1}) == t.at({0, 0, 0}));

  CHECK_THROWS_AS(permute_congruence(t, std::vector<std::size_t>{0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("congruence permutations compose contravariantly") {
  std::mt19937_64 eng(47);
  Tensor<BigInt> t = random_symmetric(2, 4, eng);
  const std::vector<std::size_t> sigma{1, 3, 0, 2};
  const std::vector<std::size_t> tau{2, 0, 3, 1};
  // applying tau then sigma looks up tau[sigma[i]]
  std::vector<std::size_t> composed(4);
  for (std::size_t i = 0; i < 4; ++i) composed[i] = tau[sigma[i]];
  CHECK(permute_congruence(permute_congruence(t, tau), sigma) ==
        permute_congruence(t, composed));
}

TEST_CASE("symmetry check") {
  std::mt19937_64 eng(53);
  CHECK(symmetry_check(random_symmetric(3, 3, eng)));
  Tensor<BigInt> t = Tensor<BigInt>::cubic(2, 2);
  t.at({0, 1}) = 1;  // t(1,0) stays 0
  CHECK(!symmetry_check(t));
}

TEST_CASE("explicit scalar conversions") {
  Tensor<BigInt> t = Tensor<BigInt>::cubic(2, 2);
  t.at({0, 0}) = 3;
  Tensor<BigRat> r = to_rational(t);
  CHECK(r.at({0, 0}) == BigRat(3));
  Tensor<double> d = to_float64(r);
  CHECK(d.at({0, 0}) == 3.0);

  Matrix<BigInt> m(1, 2);
  m(0, 1) = 5;
  CHECK(to_rational(m)(0, 1) == BigRat(5));
}

TEST_CASE("permutation matrix validates bijections") {
  Matrix<BigInt> p = Matrix<BigInt>::permutation({1, 0, 2});
  CHECK(p(0, 1) == BigInt(1));
  CHECK(p(0, 0) == BigInt(0));
  CHECK_THROWS_AS(Matrix<BigInt>::permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix<BigInt>::permutation({0, 3, 1}), std::invalid_argument);
}
