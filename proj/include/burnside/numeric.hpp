#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace burnside {

/// Exact rationals and integers (GMP backed). Rationals are always kept in
/// lowest terms with a positive denominator.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Working real type: 50 significant decimal digits (MPFR backed).
inline constexpr unsigned kRealDigits = 50;
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kRealDigits>,
    boost::multiprecision::et_off>;

inline Real to_real(const Rational& q) { return Real(q); }

inline double to_double(const Real& x) { return static_cast<double>(x); }

inline Rational make_rational(long num, long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" or "p" for integers.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits.
std::string to_string(const Real& x, int digits = 17);

const Real& pi_real();

}  // namespace burnside
