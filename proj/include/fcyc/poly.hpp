#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcyc/field.hpp"
#include "fcyc/numeric.hpp"

namespace fcyc {

class QPoly;

/// Dense univariate polynomial over a finite field, ascending coefficients,
/// no trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  /// Degree reported for the zero polynomial; stands for minus infinity.
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field f = Field()) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);
  /// From raw encodings, e.g. {1,1,1} = t^2+t+1 over GF(2).
  static Poly from_reps(const Field& f, std::initializer_list<std::uint32_t> reps);
  static Poly from_reps(const Field& f, std::span<const std::uint32_t> reps);
  static Poly constant(const Field& f, Elem c);
  static Poly one(const Field& f) { return constant(f, f.one()); }
  /// c * t^d
  static Poly monomial(const Field& f, Elem c, std::size_t d);
  /// t - a
  static Poly linear(const Field& f, Elem a);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == f_.one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }
  Elem lead() const { return c_.empty() ? f_.zero() : c_.back(); }
  /// Coefficient of t^i (zero beyond the degree).
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem eval(Elem x) const;
  /// "1,1,1" form.
  std::string to_text() const;
  /// Human-readable, e.g. "t^2+t+1" (coefficients printed as encodings).
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

 private:
  void trim();

  Field f_;
  std::vector<Elem> c_;
};

/// Canonical order: degree first, then coefficients from the constant term up.
bool poly_less(const Poly& a, const Poly& b);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Throws std::domain_error on division by the zero polynomial.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Quotient a/b; throws std::domain_error unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
/// Monic gcd; gcd(a, 0) = monic(a). Throws std::domain_error if both are zero.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly pow(const Poly& a, unsigned e);
/// base^e mod m, exponent given as a big integer.
Poly pow_mod(const Poly& base, const Integer& e, const Poly& m);

/// Throws std::domain_error for constants.
bool is_irreducible(const Poly& f);

struct FactorPower {
  Poly h;
  unsigned e = 0;
};

/// Monic irreducible factors with multiplicities, sorted by poly_less.
struct Factorization {
  std::vector<FactorPower> factors;

  /// Product of h^e.
  Poly expand(const Field& f) const;
  std::string to_string() const;
};

/// Square-free decomposition, distinct-degree splitting, then randomized
/// equal-degree splitting (trace map in characteristic 2). Output order does
/// not depend on the random path. Throws std::domain_error for constants.
Factorization factor(const Poly& f, Rng& rng);

/// Number of monic irreducibles of degree r over GF(q). Throws
/// std::domain_error for r < 1.
Integer count_irreducibles(unsigned r, const Integer& q);
/// Same count as a polynomial in q with rational coefficients.
QPoly count_irreducibles_poly(unsigned r);

int moebius(unsigned n);

/// Exponential valuation with an explicit infinity for the zero polynomial.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(unsigned v) { return Valuation(v); }

  bool is_infinite() const { return inf_; }
  /// Throws std::logic_error when infinite.
  unsigned value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  explicit Valuation(unsigned v) : inf_(false), v_(v) {}

  bool inf_ = true;
  unsigned v_ = 0;
};

/// Largest k with h^k | a. Throws std::domain_error unless h is monic
/// irreducible.
Valuation h_order(const Poly& a, const Poly& h);

/// Parses "c0,c1,..." encodings.
Poly parse_poly(const Field& f, std::string_view text);

}  // namespace fcyc
