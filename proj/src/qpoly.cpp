#include "fcyc/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcyc {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, unsigned d) {
  std::vector<Rational> v(d + 1);
  v[d] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

bool QPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::subst_power(unsigned r) const {
  if (r == 0) throw std::domain_error("substitution power must be positive");
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * r + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * r] = c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::taylor_shift(const Rational& b) const {
  std::vector<Rational> v(c_);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) v[j] += b * v[j + 1];
  return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (i == 0 || mag != 1) {
      s += fcyc::to_string(mag);
      if (i > 0) s += '*';
    }
    if (i > 0) s += 'q';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x = -x;
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rational> v(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= s;
  return QPoly(std::move(v));
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly r = QPoly::constant(1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

QDivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Rational> qc(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    Rational c = r[i] / d.back();
    qc[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * d[j];
  }
  r.resize(db);
  return {QPoly(std::move(qc)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [qt, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return qt;
}

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Primitive integer polynomial proportional to a.
ZPoly primitive(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  for (const auto& c : a.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, made primitive.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= b.back();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    ztrim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  ZPoly x = primitive(a), y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> v;
  for (auto& c : x) v.emplace_back(c, x.back());
  return QPoly(std::move(v));
}

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational l = den.lead();
  num_ = (1 / l) * num;
  den_ = (1 / l) * den;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole of rational function");
  return num_.eval(x) / d;
}

RatFunc RatFunc::subst_power(unsigned r) const {
  return RatFunc(num_.subst_power(r), den_.subst_power(r));
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den() == b.den()) return RatFunc(a.num() + b.num(), a.den());
  return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num(), a.den()); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num() * b.den(), a.den() * b.num());
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      Rational r(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      return r;
    }
    Integer exp10 = 1;
    std::string digits = s;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      long ex = std::stol(s.substr(e + 1));
      digits = s.substr(0, e);
      Rational r = parse_rational(digits);
      return r * rpow(Rational(10), ex);
    }
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      std::string frac = digits.substr(dot + 1);
      digits = digits.substr(0, dot) + frac;
      exp10 = ipow(10, frac.size());
    }
    if (digits == "-" || digits == "+" || digits.empty()) throw std::invalid_argument(text);
    if (digits[0] == '+') digits.erase(0, 1);
    Rational r(Integer(digits, 10), exp10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
}

}  // namespace fcyc
