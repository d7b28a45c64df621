#include "fcyc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcyc/genfun.hpp"
#include "fcyc/poly.hpp"

namespace fcyc {

namespace {

void check_q(const Integer& q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}

Rational inv_pow(const Integer& q, unsigned long e) { return Rational(Integer(1), ipow(q, e)); }

Integer ceil_rational(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

// floor(sqrt(x) * 10^digits) / 10^digits and the matching upper value.
Interval sqrt_enclosure(const Rational& x, unsigned digits) {
  const Integer scale = ipow(10, digits);
  Integer scaled_floor;
  Rational t = x * scale * scale;
  mpz_fdiv_q(scaled_floor.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled_floor.get_mpz_t());
  // root^2 <= floor(t) <= t < floor(t) + 1 <= (root+1)^2
  return {ratio(root, scale), ratio(root + 1, scale)};
}

}  // namespace

Rational omega(unsigned n, const Integer& q) {
  check_q(q);
  Rational p = 1;
  for (unsigned i = 1; i <= n; ++i) p *= 1 - inv_pow(q, i);
  return p;
}

Interval omega_inf(const Integer& q, unsigned m) {
  check_q(q);
  if (m < 2) throw std::invalid_argument("truncation must be at least 2");
  Rational tail = inv_pow(q, m) / (1 - inv_pow(q, 1));
  return {omega(m - 1, q) * (1 - tail), omega(m, q)};
}

Rational c0(unsigned n, const Integer& q) {
  check_q(q);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  Rational p = 1;
  for (unsigned i = 2; i <= n; ++i) p *= 1 - inv_pow(q, i);
  return Rational(q * q) * (1 - p);
}

Interval c0_inf(const Integer& q, unsigned m) {
  Interval w = omega_inf(q, m);
  const Rational first = 1 - inv_pow(q, 1);
  const Rational qq = q * q;
  return {qq * (1 - w.hi / first), qq * (1 - w.lo / first)};
}

Integer r_nqd(unsigned n, const Integer& q, unsigned d) {
  check_q(q);
  if (d < 1 || d > n || n % d) throw std::invalid_argument("d must divide n");
  if (d == n) return 0;
  const unsigned k = n / d;
  const Integer qd = ipow(q, d);
  Rational v = omega(n, q) * c0(k, qd) / omega(k, qd);
  v *= ratio(count_irreducibles(d, q), qd);
  v *= ipow(q, n * n - n - d);
  if (v.get_den() != 1) throw std::logic_error("r(n,q,d) is not an integer");
  return v.get_num();
}

Integer r_nq(unsigned n, const Integer& q) {
  Integer s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += r_nqd(n, q, d);
  return s;
}

Rational c1(unsigned n, const Integer& q) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return ratio(r_nq(n, q), ipow(q, n * n - n - 1));
}

Interval neg_log1m(const Rational& x, unsigned terms) {
  if (x <= 0 || x >= 1) throw std::invalid_argument("argument must lie in (0, 1)");
  Rational s = 0, p = 1;
  for (unsigned k = 1; k <= terms; ++k) {
    p *= x;
    s += p / k;
  }
  Rational tail = p * x / (Rational(terms + 1) * (1 - x));
  return {s, s + tail};
}

Interval c_star(const Integer& q, unsigned m) {
  check_q(q);
  const Integer q2 = q * q;
  const Interval c0i = c0_inf(q, m);
  const Interval c0q2 = c0_inf(q2, m);
  const Interval wq2 = omega_inf(q2, m);
  const Rational w4 = omega(4, q);
  const Interval gamma{w4 * c0q2.lo / wq2.hi, w4 * c0q2.hi / wq2.lo};
  // E = -log(1 - 1/q) + q log(1 - 1/q^2)
  const Interval l1 = neg_log1m(inv_pow(q, 1));
  const Interval l2 = neg_log1m(inv_pow(q, 2));
  const Interval e{l1.lo - Rational(q) * l2.hi, l1.hi - Rational(q) * l2.lo};
  if (e.lo < 0) throw std::logic_error("log enclosure too wide");
  return {c0i.lo + Rational(q) * gamma.lo * e.lo, c0i.hi + Rational(q) * gamma.hi * e.hi};
}

Interval rho(const Integer& q, unsigned m, unsigned digits) {
  const Interval cs = c_star(q, m);
  const Interval w = omega_inf(q, m);
  const Rational arg_lo = 1 + 4 * cs.lo / (Rational(q) * w.hi);
  const Rational arg_hi = 1 + 4 * cs.hi / (Rational(q) * w.lo);
  const Interval s_lo = sqrt_enclosure(arg_lo, digits);
  const Interval s_hi = sqrt_enclosure(arg_hi, digits);
  return {(1 + s_lo.lo) / 2, (1 + s_hi.hi) / 2};
}

bool lemma_positive(const std::vector<Rational>& alpha, unsigned n, const std::vector<Rational>& beta,
                    const Rational& q0) {
  for (const auto& c : alpha)
    if (c < 0) throw std::invalid_argument("negative coefficient in a");
  for (const auto& c : beta)
    if (c < 0) throw std::invalid_argument("negative coefficient in b");
  QPoly b{std::vector<Rational>(beta)};
  if (b.degree() >= static_cast<int>(n)) throw std::invalid_argument("deg b must be below n");
  if (q0 < 0) throw std::invalid_argument("q0 must be nonnegative");
  QPoly a{std::vector<Rational>(alpha)};
  return a.eval(q0) * rpow(q0, n) - b.eval(q0) >= 0;
}

NonnegCertificate certify_nonneg(const QPoly& d, const Integer& q0) {
  NonnegCertificate cert;
  cert.q0 = q0;
  if (d.is_zero()) {
    cert.holds = true;
    cert.tail_start = q0;
    cert.tail_method = "zero";
    return cert;
  }
  if (d.degree() == 0) {
    cert.holds = d.lead() > 0;
    cert.tail_start = q0;
    cert.tail_method = "constant";
    if (!cert.holds) cert.counterexample = q0;
    return cert;
  }
  if (d.lead() < 0) throw std::invalid_argument("negative leading coefficient");

  Rational mx = 0;
  for (int i = 0; i < d.degree(); ++i) mx = std::max(mx, Rational(abs(d.coeff(i))));
  Integer cauchy = std::max(q0, ceil_rational(1 + mx / d.lead()));

  auto shift_nonneg = [&](const Integer& b) {
    QPoly s = d.taylor_shift(Rational(b));
    return std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const Rational& c) { return c >= 0; });
  };
  cert.tail_start = cauchy;
  cert.tail_method = "root-bound";
  for (Integer gap = 0; q0 + gap < cauchy; gap = gap == 0 ? Integer(1) : Integer(gap * 2)) {
    if (shift_nonneg(q0 + gap)) {
      cert.tail_start = q0 + gap;
      cert.tail_method = "taylor-shift";
      break;
    }
  }
  for (Integer x = q0; x < cert.tail_start; ++x) {
    if (d.eval(Rational(x)) < 0) {
      cert.counterexample = x;
      return cert;
    }
  }
  cert.holds = true;
  return cert;
}

ConjectureResult conjecture_check(unsigned n, const QPoly& unc) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const long s = static_cast<long>(n) * n - n - 1;
  const long low = s - static_cast<long>(n);
  const unsigned k = low < 0 ? static_cast<unsigned>(-low) : 0;
  const bool cleared = k > 0;
  // scale * (q^s (1 + 1/(2q))^n - unc) with scale = 2^n q^k when clearing.
  std::vector<Rational> c(static_cast<std::size_t>(s + k + 1));
  Integer binom = 1;
  for (unsigned j = 0; j <= n; ++j) {
    Rational term = ratio(binom, ipow(2, j));
    if (cleared) term *= ipow(2, n);
    c[static_cast<std::size_t>(s - j + k)] += term;
    binom = binom * (n - j) / (j + 1);
  }
  QPoly d(std::move(c));
  QPoly u = cleared ? Rational(ipow(2, n)) * (unc * QPoly::monomial(1, k)) : unc;
  ConjectureResult r;
  r.n = n;
  r.d = d - u;
  r.cert = certify_nonneg(r.d, 2);
  return r;
}

ConjectureResult conjecture_check(unsigned n) { return conjecture_check(n, unc_poly(n)); }

BoundReport bound_report(unsigned n, const Integer& q, const std::optional<QPoly>& unc) {
  if (n < 3) throw std::invalid_argument("bound report needs n >= 3");
  check_q(q);
  BoundReport r;
  r.n = n;
  r.q = q;
  const Integer base = ipow(q, n * n - n - 1);
  r.lower = Rational(base) * (1 + ratio(n - 1, 2) / q - inv_pow(q, 3));
  if (q == 2) {
    r.upper = Rational(183, 100) * base * rpow(Rational(983, 500), n);
    r.upper_rule = "1.83 * 2^(n^2-n-1) * 1.966^n";
  } else if (q == 3) {
    r.upper = Rational(156, 100) * base * rpow(Rational(159, 100), n);
    r.upper_rule = "1.56 * 3^(n^2-n-1) * 1.59^n";
  } else {
    r.upper = c_star(q).hi * base * rpow(1 + inv_pow(q, 1) + 2 * inv_pow(q, 2), n);
    r.upper_rule = "c*(q) * q^(n^2-n-1) * (1 + 1/q + 2/q^2)^n";
  }
  if (unc) {
    Rational v = unc->eval(Rational(q));
    if (v.get_den() != 1) throw std::logic_error("unc value is not an integer");
    r.actual = v.get_num();
    r.lower_holds = r.lower < v;
    r.upper_holds = v < r.upper;
  }
  return r;
}

}  // namespace fcyc
