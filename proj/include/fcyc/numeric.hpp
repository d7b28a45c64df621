#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fcyc {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// num/den in canonical form; gmpxx's two-argument constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, long e) {
  Rational r;
  Integer num = ipow(base.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
  Integer den = ipow(base.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) std::swap(num, den);
  r = Rational(num, den);
  r.canonicalize();
  return r;
}

/// Parses decimal ("0.05"), fraction ("1/20") or integer text exactly.
Rational parse_rational(const std::string& text);

}  // namespace fcyc
