#pragma once

#include <string>
#include <vector>

#include "fcyc/numeric.hpp"

namespace fcyc {

/// Polynomial in the indeterminate q with exact rational coefficients,
/// ascending, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly var() { return monomial(1, 1); }
  /// c * q^d
  static QPoly monomial(const Rational& c, unsigned d);
  /// From integers, ascending.
  static QPoly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// True when every coefficient is an integer.
  bool is_integral() const;

  Rational eval(const Rational& x) const;
  /// q -> q^r
  QPoly subst_power(unsigned r) const;
  /// p(q + b)
  QPoly taylor_shift(const Rational& b) const;

  /// e.g. "q^5+q^4-q^2", "1/2*q^3-q"
  std::string to_string() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rational& s, const QPoly& a);
QPoly pow(const QPoly& a, unsigned e);

struct QDivMod {
  QPoly quotient;
  QPoly remainder;
};
/// Throws std::domain_error on a zero divisor.
QDivMod divmod(const QPoly& a, const QPoly& b);
/// Throws std::domain_error unless b divides a.
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(QPoly::constant(1)) {}
  RatFunc(const QPoly& p) : num_(p), den_(QPoly::constant(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(QPoly::constant(c)) {}                // NOLINT
  /// Throws std::domain_error on a zero denominator.
  RatFunc(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational eval(const Rational& x) const;
  RatFunc subst_power(unsigned r) const;
  std::string to_string() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  QPoly num_;
  QPoly den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
/// Throws std::domain_error on division by zero.
RatFunc operator/(const RatFunc& a, const RatFunc& b);

}  // namespace fcyc
