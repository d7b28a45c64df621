#pragma once

#include <optional>

#include "fcyc/matrix.hpp"
#include "fcyc/numeric.hpp"
#include "fcyc/poly.hpp"

namespace fcyc {

/// u != 0 with ord_X(u) = a, a != 1 and gcd(a, c_X/a) = 1.
struct WitnessCert {
  Vec u;
  Poly a;
};

struct WitnessOptions {
  /// Re-check the loop invariants (u != 0, ord(u) = a != 1, u = v g(X),
  /// d = gcd(a, c/a)) on every pass; throws std::logic_error on violation.
  bool check_invariants = false;
};

struct WitnessOutcome {
  std::optional<WitnessCert> cert;
  /// Passes through the loop head.
  unsigned iterations = 0;
  /// g at termination.
  Poly g;
};

/// floor(log2 n) + 2
unsigned witness_iteration_bound(std::size_t n);

/// Decides whether v is a g-witness for some non-constant divisor g of c.
/// `c` must be char_poly(x) (not checked). Throws std::invalid_argument for
/// v = 0.
WitnessOutcome is_f_witness(const Vec& v, const Mat& x, const Poly& c, WitnessOptions opts = {});

/// Never throws; malformed certificates are rejected.
bool verify_cert(const WitnessCert& cert, const Mat& x, const Poly& c);
bool verify_cert(const WitnessCert& cert, const Mat& x);

/// Least m with q^m * eps >= 1. Throws std::invalid_argument unless 0 < eps < 1.
unsigned vector_budget(const Rational& eps, std::uint32_t q);

struct IsfOptions {
  bool check_invariants = false;
  /// Factor the certificate polynomial into irreducibles.
  bool factor_certificate = false;
};

struct IsfResult {
  bool verdict = false;
  std::optional<WitnessCert> cert;
  std::optional<Factorization> cert_factors;
  /// Largest per-vector loop count.
  unsigned iterations_used = 0;
  /// Nonzero vectors handed to is_f_witness.
  unsigned vectors_tested = 0;
  /// All draws, including skipped zero vectors.
  unsigned draws = 0;
  unsigned budget = 0;
};

/// One-sided Monte Carlo test: True is always correct; False is wrong with
/// probability at most eps. Zero draws are skipped without using up the
/// budget; total draws are capped at 64 times the budget.
IsfResult is_f_cyclic(const Mat& x, const Rational& eps, Rng& rng, IsfOptions opts = {});
/// Same with a precomputed characteristic polynomial.
IsfResult is_f_cyclic(const Mat& x, const Poly& c, const Rational& eps, Rng& rng,
                      IsfOptions opts = {});

/// prod over distinct irreducible h | g of (1 - q^-deg h). Throws
/// std::invalid_argument if g does not divide c_X, or if x is not f-cyclic
/// relative to some irreducible factor of g.
Rational witness_probability(const Mat& x, const Poly& g, Rng& rng);

}  // namespace fcyc
