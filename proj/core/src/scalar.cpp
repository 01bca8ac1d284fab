#include "gcdt/scalar.hpp"

#include <stdexcept>

namespace gcdt {

std::string format_int(const BigInt& v) { return v.str(); }

std::string format_rat(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_decimal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_int(std::string_view text) {
  if (!is_decimal(text)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

BigRat parse_rat(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return BigRat(num, den);
}

BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt acc = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

BigRat ratpow(const BigRat& base, std::uint64_t e) {
  BigRat acc = 1;
  BigRat b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

double to_double(const BigRat& v) { return v.convert_to<double>(); }
double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace gcdt
