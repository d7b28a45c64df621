#include "fcyc/witness.hpp"

#include <bit>
#include <stdexcept>

namespace fcyc {

unsigned witness_iteration_bound(std::size_t n) {
  return static_cast<unsigned>(std::bit_width(n)) - 1 + 2;
}

WitnessOutcome is_f_witness(const Vec& v, const Mat& x, const Poly& c, WitnessOptions opts) {
  if (v.size() != x.n()) throw std::invalid_argument("vector length mismatch");
  if (is_zero(v)) throw std::invalid_argument("witness test needs a nonzero vector");
  const Field& f = x.field();
  const Spin s = spin(v, x);
  WitnessOutcome out;
  Vec u = v;
  Poly g = Poly::one(f);
  Poly a = s.order;
  Poly d = gcd(a, exact_div(c, a));
  const unsigned bound = witness_iteration_bound(x.n());
  for (unsigned i = 1; i <= bound; ++i) {
    out.iterations = i;
    if (opts.check_invariants) {
      if (is_zero(u)) throw std::logic_error("witness loop: u = 0");
      if (a.is_one() || ord_vector(u, x) != a) throw std::logic_error("witness loop: a != ord(u)");
      if (apply_poly(s, g) != u) throw std::logic_error("witness loop: u != v g(X)");
      if (d != gcd(a, exact_div(c, a))) throw std::logic_error("witness loop: d != gcd(a, c/a)");
    }
    if (d.is_one()) {
      out.cert = WitnessCert{u, a};
      out.g = g;
      return out;
    }
    if (d == a) {
      out.g = g;
      return out;
    }
    g = g * d;
    u = apply_poly(s, g);
    a = exact_div(a, d);
    Poly e = gcd(a, d);
    d = e * gcd(exact_div(a, e), e);
  }
  throw std::logic_error("witness loop exceeded its iteration bound");
}

bool verify_cert(const WitnessCert& cert, const Mat& x, const Poly& c) {
  try {
    if (cert.u.size() != x.n() || is_zero(cert.u)) return false;
    if (!cert.a.is_monic() || cert.a.is_one()) return false;
    if (ord_vector(cert.u, x) != cert.a) return false;
    auto [cofactor, r] = divmod(c, cert.a);
    if (!r.is_zero()) return false;
    return gcd(cert.a, cofactor).is_one();
  } catch (const std::exception&) {
    return false;
  }
}

bool verify_cert(const WitnessCert& cert, const Mat& x) { return verify_cert(cert, x, char_poly(x)); }

unsigned vector_budget(const Rational& eps, std::uint32_t q) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  unsigned m = 0;
  Rational t = eps;
  while (t < 1) {
    t *= q;
    ++m;
  }
  return m;
}

IsfResult is_f_cyclic(const Mat& x, const Poly& c, const Rational& eps, Rng& rng, IsfOptions opts) {
  IsfResult res;
  res.budget = vector_budget(eps, x.field().q());
  const unsigned max_draws = 64 * res.budget;
  while (res.vectors_tested < res.budget && res.draws < max_draws) {
    Vec v = random_vector(x.n(), x.field(), rng);
    ++res.draws;
    if (is_zero(v)) continue;
    ++res.vectors_tested;
    WitnessOutcome w = is_f_witness(v, x, c, {opts.check_invariants});
    res.iterations_used = std::max(res.iterations_used, w.iterations);
    if (w.cert) {
      res.verdict = true;
      if (opts.factor_certificate) res.cert_factors = factor(w.cert->a, rng);
      res.cert = std::move(w.cert);
      return res;
    }
  }
  return res;
}

IsfResult is_f_cyclic(const Mat& x, const Rational& eps, Rng& rng, IsfOptions opts) {
  return is_f_cyclic(x, char_poly(x), eps, rng, opts);
}

Rational witness_probability(const Mat& x, const Poly& g, Rng& rng) {
  const Poly c = char_poly(x);
  if (g.degree() < 1 || !divmod(c, g).remainder.is_zero())
    throw std::invalid_argument("g must be a non-constant divisor of the characteristic polynomial");
  const auto verdict = classify_fcyclic(x, factor(c, rng));
  const Integer q = x.field().q();
  Rational p = 1;
  for (const auto& [h, e] : factor(g, rng).factors) {
    bool cyclic = false;
    for (const auto& hc : verdict.cyclic_primes) cyclic = cyclic || hc == h;
    if (!cyclic) throw std::invalid_argument("matrix is not f-cyclic relative to " + h.to_string());
    p *= 1 - Rational(Integer(1), ipow(q, static_cast<unsigned long>(h.degree())));
  }
  return p;
}

}  // namespace fcyc
