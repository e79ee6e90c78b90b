#ifndef HKSIG_RATIONAL_HPP
#define HKSIG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

#include "hksig/errors.hpp"

namespace hksig {

// Every reported number in the estimator pipeline is an exact rational;
// floating point appears only in display-only decimal fields.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Canonical "num/den" form; integers print without the "/1".
inline std::string rational_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Display-only decimal, 15 significant digits.
inline std::string rational_decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(15) << r.convert_to<double>();
  return os.str();
}

// Inverse of rational_string; accepts "num" and "num/den".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw Error("bad rational literal '" + text + "': " + e.what());
  }
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace hksig

#endif
