#include "gcdt/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace gcdt {

IntegerSet::IntegerSet(std::vector<std::uint64_t> elements) : elems_(std::move(elements)) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t v : elems_) {
    if (v < 1) throw std::invalid_argument("set elements must be positive");
    if (v > max_element) {
      throw std::invalid_argument("set element " + std::to_string(v) + " exceeds the 10^9 cap");
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("duplicate set element " + std::to_string(v));
    }
  }
}

bool IntegerSet::contains(std::uint64_t v) const {
  return std::find(elems_.begin(), elems_.end(), v) != elems_.end();
}

IntegerSet IntegerSet::sorted() const {
  std::vector<std::uint64_t> copy = elems_;
  std::sort(copy.begin(), copy.end());
  return IntegerSet(std::move(copy));
}

ArithmeticTable::ArithmeticTable(IntegerSet domain, std::vector<BigRat> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (domain_.size() != values_.size()) {
    throw std::invalid_argument("arithmetic table: one value per domain element required");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) index_[domain_[i]] = i;
}

const BigRat& ArithmeticTable::value(std::uint64_t element) const {
  auto it = index_.find(element);
  if (it == index_.end()) {
    throw std::invalid_argument("no table value for element " + std::to_string(element));
  }
  return values_[it->second];
}

std::uint64_t gcd_many(const std::vector<std::uint64_t>& values) {
  if (values.empty()) throw std::invalid_argument("gcd of an empty list");
  std::uint64_t g = 0;
  for (std::uint64_t v : values) {
    if (v < 1) throw std::invalid_argument("gcd inputs must be positive");
    g = std::gcd(g, v);
  }
  return g;
}

IntegerSet divisors(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("divisors of a non-positive integer");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d != k / d) large.push_back(k / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return IntegerSet(std::move(small));
}

IntegerSet factor_closure(const IntegerSet& s) {
  if (s.empty()) throw std::invalid_argument("closure of an empty set");
  std::set<std::uint64_t> acc;
  for (std::uint64_t v : s) {
    for (std::uint64_t d : divisors(v)) acc.insert(d);
  }
  return IntegerSet(std::vector<std::uint64_t>(acc.begin(), acc.end()));
}

IntegerSet gcd_closure(const IntegerSet& s) {
  if (s.empty()) throw std::invalid_argument("closure of an empty set");
  std::set<std::uint64_t> acc(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> snapshot(acc.begin(), acc.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (acc.insert(std::gcd(snapshot[i], snapshot[j])).second) grew = true;
      }
    }
  }
  return IntegerSet(std::vector<std::uint64_t>(acc.begin(), acc.end()));
}

SetClassification classify_set(const IntegerSet& s) {
  if (s.empty()) throw std::invalid_argument("classification of an empty set");
  SetClassification out;
  out.factor_closed = true;
  for (std::uint64_t v : s) {
    for (std::uint64_t d : divisors(v)) {
      if (!s.contains(d)) {
        out.factor_closed = false;
        break;
      }
    }
    if (!out.factor_closed) break;
  }
  out.gcd_closed = true;
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size() && out.gcd_closed; ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!s.contains(std::gcd(e[i], e[j]))) {
        out.gcd_closed = false;
        break;
      }
    }
  }
  return out;
}

void require_factor_closed(const IntegerSet& s) {
  for (std::uint64_t v : s) {
    for (std::uint64_t d : divisors(v)) {
      if (!s.contains(d)) {
        throw std::invalid_argument("set not factor-closed: divisor " + std::to_string(d) +
                                    " of " + std::to_string(v) + " is missing");
      }
    }
  }
}

void require_gcd_closed(const IntegerSet& s) {
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::uint64_t g = std::gcd(e[i], e[j]);
      if (!s.contains(g)) {
        throw std::invalid_argument("set not gcd-closed: gcd(" + std::to_string(e[i]) + ", " +
                                    std::to_string(e[j]) + ") = " + std::to_string(g) +
                                    " is missing");
      }
    }
  }
}

namespace {

// prime factorization by trial division; inputs capped at 10^9 so sqrt fits easily
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t k) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    if (k % p) continue;
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (k > 1) out.emplace_back(k, 1);
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("totient of a non-positive integer");
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize_u64(k)) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int mobius(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("mobius of a non-positive integer");
  int sign = 1;
  for (auto [p, e] : factorize_u64(k)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigRat dirichlet_convolve(const ArithmeticFn& f, const ArithmeticFn& g, std::uint64_t k) {
  if (!f || !g) throw std::invalid_argument("convolution of an undefined function");
  BigRat acc = 0;
  for (std::uint64_t d : divisors(k)) acc += f(d) * g(k / d);
  return acc;
}

ArithmeticTable generalized_totient(const IntegerSet& s) {
  if (s.empty()) throw std::invalid_argument("totient table of an empty set");
  // ascending evaluation respects divisibility, so every proper divisor in s
  // is already resolved when its multiples come up
  std::vector<std::uint64_t> asc = s.sorted().elements();
  std::map<std::uint64_t, BigRat> psi;
  for (std::uint64_t v : asc) {
    BigRat val = BigRat(BigInt(v));
    for (std::uint64_t w : asc) {
      if (w == v) break;
      if (v % w == 0) val -= psi[w];
    }
    psi[v] = val;
  }
  std::vector<BigRat> aligned;
  aligned.reserve(s.size());
  for (std::uint64_t v : s) aligned.push_back(psi[v]);
  return ArithmeticTable(s, std::move(aligned));
}

ArithmeticFn identity_fn() {
  return [](std::uint64_t k) { return BigRat(BigInt(k)); };
}

ArithmeticFn one_fn() {
  return [](std::uint64_t) { return BigRat(1); };
}

ArithmeticFn mobius_fn() {
  return [](std::uint64_t k) { return BigRat(mobius(k)); };
}

ArithmeticFn euler_phi_fn() {
  return [](std::uint64_t k) { return BigRat(BigInt(euler_phi(k))); };
}

ArithmeticFn power_fn(unsigned exponent) {
  return [exponent](std::uint64_t k) { return BigRat(ipow(BigInt(k), exponent)); };
}

}  // namespace gcdt
