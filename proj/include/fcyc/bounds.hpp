#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcyc/numeric.hpp"
#include "fcyc/qpoly.hpp"

namespace fcyc {

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

inline constexpr unsigned kDefaultTruncation = 12;

/// prod_{i=1..n} (1 - q^-i). Throws std::invalid_argument for q < 2.
Rational omega(unsigned n, const Integer& q);
/// Enclosure of the infinite product using m factors (m >= 2).
Interval omega_inf(const Integer& q, unsigned m = kDefaultTruncation);

/// q^2 (1 - prod_{i=2..n} (1 - q^-i))
Rational c0(unsigned n, const Integer& q);
Interval c0_inf(const Integer& q, unsigned m = kDefaultTruncation);

/// Number of uncyclic matrices in M(n,q) whose characteristic polynomial is
/// a power of one irreducible of degree d. Throws std::invalid_argument
/// unless d divides n.
Integer r_nqd(unsigned n, const Integer& q, unsigned d);
/// Sum of r_nqd over divisors d of n.
Integer r_nq(unsigned n, const Integer& q);
/// r(n,q) / q^(n^2-n-1)
Rational c1(unsigned n, const Integer& q);

/// -log(1 - x) for rational 0 < x < 1 from `terms` series terms plus the
/// geometric tail bound.
Interval neg_log1m(const Rational& x, unsigned terms = 64);

/// Enclosure of c0(inf,q) + q gamma(q) (q log(1 - q^-2) - log(1 - q^-1)),
/// gamma(q) = omega(4,q) c0(inf,q^2) / omega(inf,q^2).
Interval c_star(const Integer& q, unsigned m = kDefaultTruncation);

/// Enclosure of (1 + sqrt(1 + 4 c*(q) / (q omega(inf,q)))) / 2, taking
/// square roots to `digits` decimal places in the safe direction.
Interval rho(const Integer& q, unsigned m = kDefaultTruncation, unsigned digits = 30);

/// For c(q) = a(q) q^n - b(q) with nonnegative coefficients and deg b < n:
/// true iff c(q0) >= 0, which then holds for every q >= q0. Throws
/// std::invalid_argument on negative coefficients or deg b >= n.
bool lemma_positive(const std::vector<Rational>& alpha, unsigned n,
                    const std::vector<Rational>& beta, const Rational& q0);

struct NonnegCertificate {
  bool holds = false;
  /// Exact evaluation covers the integers q0..tail_start-1.
  Integer q0;
  Integer tail_start;
  /// "taylor-shift": all coefficients of d(q + tail_start) are nonnegative;
  /// "root-bound": no real root at or above tail_start; "zero": d = 0;
  /// "constant": d is a nonzero constant.
  std::string tail_method;
  std::optional<Integer> counterexample;
};

/// Decides d(q) >= 0 for every integer q >= q0. Throws std::invalid_argument
/// if d is non-constant with a negative leading coefficient.
NonnegCertificate certify_nonneg(const QPoly& d, const Integer& q0);

struct ConjectureResult {
  unsigned n = 0;
  /// Positive multiple of q^(n^2-n-1)(1 + 1/(2q))^n - unc(n,q), cleared to
  /// a polynomial.
  QPoly d;
  NonnegCertificate cert;
};

ConjectureResult conjecture_check(unsigned n, const QPoly& unc);
ConjectureResult conjecture_check(unsigned n);

struct BoundReport {
  unsigned n = 0;
  Integer q;
  Rational lower;
  Rational upper;
  std::string upper_rule;
  std::optional<Integer> actual;
  /// Strict inequalities; unset when actual is unknown.
  std::optional<bool> lower_holds;
  std::optional<bool> upper_holds;
};

/// Throws std::invalid_argument for n < 3 or q < 2.
BoundReport bound_report(unsigned n, const Integer& q, const std::optional<QPoly>& unc);

}  // namespace fcyc
