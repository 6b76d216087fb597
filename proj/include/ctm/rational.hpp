#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <stdexcept>
#include <string>

namespace ctm {

// Arbitrary-precision integers and rationals. cpp_rational keeps values normalized
// (gcd-reduced, positive denominator), which the rest of the library relies on when
// comparing exact results.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// "47/42", or just "47" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) {
  BigInt den = denominator(q);
  std::string out = numerator(q).str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

// Locale-independent decimal with the given number of significant digits.
inline std::string to_decimal_string(const Rational& q, int digits = 12) {
  double x = q.convert_to<double>();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, digits);
  if (res.ec != std::errc{}) throw std::runtime_error("decimal formatting failed");
  return std::string(buf, res.ptr);
}

// The CLI's rendering of an exact value: fraction plus decimal approximation.
inline std::string format_exact(const Rational& q) {
  return to_fraction_string(q) + " (" + to_decimal_string(q) + ")";
}

}  // namespace ctm
