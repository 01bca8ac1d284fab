#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gcdt/scalar.hpp"

namespace gcdt {

/// Ordered collection of distinct positive integers. The given order is kept:
/// row/column labels elsewhere follow it.
class IntegerSet {
 public:
  static constexpr std::uint64_t max_element = 1'000'000'000;

  IntegerSet() = default;
  explicit IntegerSet(std::vector<std::uint64_t> elements);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  std::uint64_t operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<std::uint64_t>& elements() const { return elems_; }
  bool contains(std::uint64_t v) const;
  /// Ascending copy.
  IntegerSet sorted() const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  bool operator==(const IntegerSet& other) const = default;

 private:
  std::vector<std::uint64_t> elems_;
};

/// Exact rational values attached to each element of a domain set
/// (totients, Möbius values, convolution results, ...).
class ArithmeticTable {
 public:
  ArithmeticTable(IntegerSet domain, std::vector<BigRat> values);

  const IntegerSet& domain() const { return domain_; }
  /// Value at the i-th domain element (domain order).
  const BigRat& operator[](std::size_t i) const { return values_[i]; }
  /// Value looked up by element; throws std::invalid_argument if absent.
  const BigRat& value(std::uint64_t element) const;
  const std::vector<BigRat>& values() const { return values_; }

 private:
  IntegerSet domain_;
  std::vector<BigRat> values_;
  std::map<std::uint64_t, std::size_t> index_;
};

using ArithmeticFn = std::function<BigRat(std::uint64_t)>;

std::uint64_t gcd_many(const std::vector<std::uint64_t>& values);

/// All positive divisors of k, ascending.
IntegerSet divisors(std::uint64_t k);

/// Minimal factor-closed superset (union of all divisors), ascending.
IntegerSet factor_closure(const IntegerSet& s);

/// Minimal superset closed under pairwise gcd, ascending.
IntegerSet gcd_closure(const IntegerSet& s);

struct SetClassification {
  bool factor_closed = false;
  bool gcd_closed = false;
};
SetClassification classify_set(const IntegerSet& s);

/// Throws std::invalid_argument naming a missing element when s fails the
/// requested closure property; used by the closed-form determinant gates.
void require_factor_closed(const IntegerSet& s);
void require_gcd_closed(const IntegerSet& s);

std::uint64_t euler_phi(std::uint64_t k);
int mobius(std::uint64_t k);

/// (f * g)(k) = sum over d | k of f(d) g(k/d), exact.
BigRat dirichlet_convolve(const ArithmeticFn& f, const ArithmeticFn& g, std::uint64_t k);

/// Recursive totient over s: value at x is x minus the values at the proper
/// divisors of x lying in s. Table is aligned with the given order of s.
ArithmeticTable generalized_totient(const IntegerSet& s);

// canned arithmetic functions for convolution and weight schemes
ArithmeticFn identity_fn();
ArithmeticFn one_fn();
ArithmeticFn mobius_fn();
ArithmeticFn euler_phi_fn();
ArithmeticFn power_fn(unsigned exponent);

}  // namespace gcdt
