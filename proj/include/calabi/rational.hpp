#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace calabi {

/// Exact arbitrary-precision integer and rational scalars used throughout the
/// symbolic layer.  All structure constants, polynomial coefficients and
/// solution-family constants are kept in this form; floating point enters
/// only at evaluation time.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Extended-precision float (50 decimal digits) used when evaluating fields
/// close to the cone point r = 1, where double accumulation would cancel.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline BigFloat to_bigfloat(const Rational& q) { return BigFloat(q); }

/// Exact conversion of an IEEE double to a rational (every finite double is
/// a dyadic rational, so no rounding is involved).
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  auto im = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational q(im);
  if (e > 0) {
    q *= Rational(BigInt(1) << e);
  } else if (e < 0) {
    q /= Rational(BigInt(1) << (-e));
  }
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

/// Error thrown when a field is evaluated outside its domain (negative
/// radicand or a pole of a coefficient function).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace calabi
