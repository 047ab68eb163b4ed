#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hsos/core/error.hpp"

namespace hsos {

/// Arbitrary-precision rational in canonical form (positive denominator,
/// reduced). Backed by GMP; every arithmetic result of mpq_class is already
/// canonical, so only construction from a numerator/denominator pair needs
/// care.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "int" or "int/uint".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'", 0);
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hsos
