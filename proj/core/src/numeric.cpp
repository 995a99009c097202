#include "avgconn/numeric.hpp"

#include <stdexcept>

namespace avgconn {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

std::string format_fraction(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& q, int places) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  BigInt magnitude = abs(num) * scale;
  BigInt rounded = magnitude / den;
  if (2 * (magnitude % den) >= den) ++rounded;

  std::string out = (num < 0 && rounded != 0) ? "-" : "";
  out += BigInt(rounded / scale).str();
  if (places > 0) {
    std::string frac = BigInt(rounded % scale).str();
    out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  }
  return out;
}

std::string format_exact(const Rational& q) {
  return format_fraction(q) + " (~" + format_decimal(q) + ")";
}

}  // namespace avgconn
