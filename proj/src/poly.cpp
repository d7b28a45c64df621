#include "fcyc/poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "fcyc/qpoly.hpp"

namespace fcyc {

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (auto e : c_)
    if (!f_.contains(e)) throw FieldError("polynomial coefficient outside field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == f_.zero()) c_.pop_back();
}

Poly Poly::from_reps(const Field& f, std::initializer_list<std::uint32_t> reps) {
  return from_reps(f, std::span<const std::uint32_t>(reps.begin(), reps.size()));
}

Poly Poly::from_reps(const Field& f, std::span<const std::uint32_t> reps) {
  std::vector<Elem> c;
  c.reserve(reps.size());
  for (auto r : reps) c.push_back(Elem{r});
  return Poly(f, std::move(c));
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t d) {
  std::vector<Elem> v(d + 1, f.zero());
  v[d] = c;
  return Poly(f, std::move(v));
}

Poly Poly::linear(const Field& f, Elem a) { return Poly(f, {f.neg(a), f.one()}); }

Elem Poly::eval(Elem x) const {
  Elem acc = f_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, x), *it);
  return acc;
}

std::string Poly::to_text() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i].rep);
  }
  return s;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == f_.zero()) continue;
    if (!s.empty()) s += '+';
    const bool unit = c_[i] == f_.one();
    if (i == 0 || !unit) s += std::to_string(c_[i].rep);
    if (i > 0) {
      if (!unit) s += '*';
      s += 't';
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  const Field& f = a.field();
  std::vector<Elem> c(a.coeffs());
  for (auto& e : c) e = f.neg(e);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> c(x.size() + y.size() - 1, f.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == f.zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(x[i], y[j]));
  }
  return Poly(f, std::move(c));
}

Poly scale(const Poly& a, Elem s) {
  const Field& f = a.field();
  std::vector<Elem> c(a.coeffs());
  for (auto& e : c) e = f.mul(e, s);
  return Poly(f, std::move(c));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Elem inv_lead = f.inv(d.back());
  std::vector<Elem> qc(r.size() - db, f.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    Elem c = f.mul(r[i], inv_lead);
    if (c == f.zero()) continue;
    qc[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, d[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(qc)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [qt, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return qt;
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return monic(exact_div(a * b, gcd(a, b)));
}

Poly derivative(const Poly& a) {
  const Field& f = a.field();
  if (a.degree() < 1) return Poly(f);
  std::vector<Elem> c(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = f.mul(f.from_int(static_cast<long long>(i % f.p())), a[i]);
  return Poly(f, std::move(c));
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::one(a.field());
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly pow_mod(const Poly& base, const Integer& e, const Poly& m) {
  Poly r = Poly::one(base.field()) % m;
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly x_poly(const Field& f) { return Poly::monomial(f, f.one(), 1); }

// Coefficientwise p-th root of a polynomial in t^p.
Poly pth_root(const Poly& a) {
  const Field& f = a.field();
  const unsigned p = f.p();
  const std::uint64_t root_exp = [&] {
    std::uint64_t e = 1;
    for (unsigned i = 1; i < f.k(); ++i) e *= p;
    return e;
  }();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(f.pow(a[i], root_exp));
  return Poly(f, std::move(c));
}

void squarefree(const Poly& f, unsigned mult, std::vector<FactorPower>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  Poly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree(pth_root(f), mult * F.p(), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (!fac.is_one()) out.push_back({monic(fac), i * mult});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (!c.is_one()) squarefree(pth_root(c), mult * F.p(), out);
}

// Pairs (product of all degree-d irreducible factors, d) of a squarefree monic g.
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly g) {
  const Field& F = g.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = x_poly(F);
  Poly h = x % g;
  const Integer q = F.q();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
    h = pow_mod(h, q, g);
    Poly gd = gcd(g, h - x);
    if (!gd.is_one()) {
      out.emplace_back(gd, d);
      g = exact_div(g, gd);
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

Poly random_below(const Field& F, int deg, Rng& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg));
  for (auto& e : c) e = F.random(rng);
  return Poly(F, std::move(c));
}

void equal_degree(const Poly& g, unsigned d, Rng& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  Integer qd = ipow(Integer(F.q()), d);
  for (;;) {
    Poly a = random_below(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(F);
    if (F.p() == 2) {
      // Absolute trace to GF(2): a + a^2 + ... + a^(2^(k d - 1)).
      Poly term = a;
      b = a;
      for (unsigned i = 1; i < F.k() * d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = pow_mod(a, (qd - 1) / 2, g) - Poly::one(F);
    }
    if (b.is_zero()) continue;
    Poly s = gcd(g, b);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(exact_div(g, s), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("irreducibility test on a constant");
  const Field& F = f.field();
  Poly g = monic(f);
  const unsigned n = static_cast<unsigned>(g.degree());
  if (n == 1) return true;
  const Poly x = x_poly(F);
  const Integer q = F.q();
  // frob[i] = t^(q^i) mod g
  std::vector<Poly> frob{x % g};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(pow_mod(frob.back(), q, g));
  if (!(frob[n] - x).is_zero() && !((frob[n] - x) % g).is_zero()) return false;
  for (unsigned r : prime_divisors(n)) {
    if (!gcd(g, frob[n / r] - x).is_one()) return false;
  }
  return true;
}

Poly Factorization::expand(const Field& f) const {
  Poly r = Poly::one(f);
  for (const auto& fp : factors) r = r * pow(fp.h, fp.e);
  return r;
}

std::string Factorization::to_string() const {
  std::string s;
  for (const auto& fp : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + fp.h.to_string() + ")";
    if (fp.e > 1) s += "^" + std::to_string(fp.e);
  }
  return s.empty() ? "1" : s;
}

Factorization factor(const Poly& f, Rng& rng) {
  if (f.degree() < 1) throw std::domain_error("factorization of a constant");
  std::vector<FactorPower> sqf;
  squarefree(monic(f), 1, sqf);
  std::vector<FactorPower> all;
  for (const auto& part : sqf) {
    for (auto& [g, d] : distinct_degree(part.h)) {
      std::vector<Poly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& h : irr) all.push_back({monic(h), part.e});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const FactorPower& a, const FactorPower& b) { return poly_less(a.h, b.h); });
  Factorization out;
  for (auto& fp : all) {
    if (!out.factors.empty() && out.factors.back().h == fp.h)
      out.factors.back().e += fp.e;
    else
      out.factors.push_back(std::move(fp));
  }
  return out;
}

int moebius(unsigned n) {
  int m = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

Integer count_irreducibles(unsigned r, const Integer& q) {
  if (r < 1) throw std::domain_error("degree must be at least 1");
  Integer sum = 0;
  for (unsigned d = 1; d <= r; ++d) {
    if (r % d) continue;
    int mu = moebius(d);
    if (mu) sum += mu * ipow(q, r / d);
  }
  return sum / r;
}

QPoly count_irreducibles_poly(unsigned r) {
  if (r < 1) throw std::domain_error("degree must be at least 1");
  std::vector<Rational> c(r + 1);
  for (unsigned d = 1; d <= r; ++d) {
    if (r % d) continue;
    c[r / d] += ratio(moebius(d), r);
  }
  for (auto& x : c) x.canonicalize();
  return QPoly(std::move(c));
}

unsigned Valuation::value() const {
  if (inf_) throw std::logic_error("valuation is infinite");
  return v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  return a.v_ <=> b.v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.inf_ || b.inf_) return Valuation::infinity();
  return Valuation::finite(a.v_ + b.v_);
}

Valuation h_order(const Poly& a, const Poly& h) {
  if (!h.is_monic() || !is_irreducible(h))
    throw std::domain_error("h-order needs a monic irreducible h");
  if (a.is_zero()) return Valuation::infinity();
  unsigned k = 0;
  Poly x = a;
  for (;;) {
    auto [qt, r] = divmod(x, h);
    if (!r.is_zero()) break;
    x = std::move(qt);
    ++k;
  }
  return Valuation::finite(k);
}

Poly parse_poly(const Field& f, std::string_view text) {
  std::vector<Elem> c;
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("malformed polynomial coefficient '" + std::string(tok) + "'");
    if (!f.contains(Elem{v}))
      throw std::invalid_argument("coefficient " + std::to_string(v) + " outside " + f.to_string());
    c.push_back(Elem{v});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Poly(f, std::move(c));
}

}  // namespace fcyc
