#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace avgconn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact quotient num/den, reduced. den must be nonzero.
Rational ratio(const BigInt& num, const BigInt& den);

/// "5/3", or "2" when the denominator is 1.
std::string format_fraction(const Rational& q);

/// Decimal rounded half away from zero to `places` digits, e.g. "1.6667".
std::string format_decimal(const Rational& q, int places = 4);

/// "5/3 (~1.6667)"
std::string format_exact(const Rational& q);

}  // namespace avgconn
