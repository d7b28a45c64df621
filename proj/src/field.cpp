#include "fcyc/field.hpp"

#include <charconv>
#include <numeric>

#include "fcyc/poly.hpp"

namespace fcyc {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t rep, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = rep % p;
    rep /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t rep = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) rep = rep * p + *it;
  return rep;
}

// Schoolbook product of residues modulo the (monic) modulus; only used while
// building tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned k,
                       const std::vector<std::uint32_t>& modulus) {
  if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
  auto da = digits(a, p, k);
  auto db = digits(b, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(k);
  for (unsigned i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return undigits(out, p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p, unsigned k,
                       const std::vector<std::uint32_t>& modulus) {
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = slow_mul(r, a, p, k, modulus);
    a = slow_mul(a, a, p, k, modulus);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    f.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) f.push_back(n);
  return f;
}

bool monic_irreducible_over_prime(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  Field base = Field::make(p, 1);
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(Elem{v});
  return is_irreducible(Poly(base, std::move(c)));
}

std::uint32_t parse_u32(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FieldError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field() {
  static const Field gf2 = make(2, 1);
  t_ = gf2.t_;
}

Field Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus,
                  std::uint32_t max_order) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order)
      throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds cap " + std::to_string(max_order));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);

  if (k > 1) {
    if (modulus) {
      const auto& m = *modulus;
      if (m.size() != k + 1 || m.back() != 1)
        throw FieldError("modulus must be monic of degree " + std::to_string(k));
      for (auto c : m)
        if (c >= p) throw FieldError("modulus coefficient out of range");
      if (!monic_irreducible_over_prime(m, p)) throw FieldError("modulus is reducible");
      t->modulus = m;
    } else {
      std::uint64_t lower_count = q;  // p^k choices of c0..c_{k-1}
      for (std::uint64_t enc = 0; enc < lower_count; ++enc) {
        auto cand = digits(static_cast<std::uint32_t>(enc), p, k);
        cand.push_back(1);
        if (monic_irreducible_over_prime(cand, p)) {
          t->modulus = std::move(cand);
          break;
        }
      }
    }
  } else if (modulus && !modulus->empty()) {
    const auto& m = *modulus;
    if (m.size() != 2 || m[1] != 1) throw FieldError("prime-field modulus must be t + c");
  }

  // Generator of the multiplicative group.
  const std::uint64_t order = q - 1;
  std::uint32_t gen = 1;
  if (q > 2) {
    auto pf = prime_factors(order);
    for (std::uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (auto r : pf)
        if (slow_pow(g, order / r, p, k, t->modulus) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
  }
  t->log.assign(q, 0);
  t->exp.assign(2 * order, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    t->exp[i] = x;
    t->exp[i + order] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, gen, p, k, t->modulus);
  }

  if (p != 2) {
    t->neg_table.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto d = digits(a, p, k);
      for (auto& c : d) c = (p - c) % p;
      t->neg_table[a] = undigits(d, p);
    }
  }
  Field f(t);
  if (p != 2 && k > 1 && q <= 1024) {
    t->add_table.resize(std::size_t{t->q} * t->q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        t->add_table[std::size_t{a} * q + b] = static_cast<std::uint16_t>(f.digit_add(a, b));
  }
  return f;
}

std::uint32_t Field::digit_add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = t_->p;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < t_->k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Field Field::parse(std::string_view spec, std::uint32_t max_order) {
  std::string_view head = spec;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    head = spec.substr(0, slash);
    std::vector<std::uint32_t> m;
    std::string_view rest = spec.substr(slash + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      m.push_back(parse_u32(rest.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    modulus = std::move(m);
  }
  std::uint32_t p = 0;
  unsigned k = 0;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_u32(head.substr(0, caret), "characteristic");
    k = parse_u32(head.substr(caret + 1), "extension degree");
  } else {
    std::uint32_t q = parse_u32(head, "field order");
    if (q < 2) throw FieldError("field order must be at least 2");
    auto pf = prime_factors(q);
    if (pf.size() != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(pf[0]);
    for (std::uint32_t r = q; r > 1; r /= p) ++k;
  }
  if (k == 1 && modulus) modulus.reset();
  return make(p, k, std::move(modulus), max_order);
}

std::string Field::to_string() const {
  std::string s = std::to_string(t_->p) + "^" + std::to_string(t_->k);
  if (t_->k > 1) {
    s += "/";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t_->modulus[i]);
    }
  }
  return s;
}

Elem Field::inv(Elem a) const {
  if (a.rep == 0) throw FieldError("inverse of zero");
  const std::uint32_t order = t_->q - 1;
  return Elem{t_->exp[(order - t_->log[a.rep]) % order]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.rep == 0) return zero();
  const std::uint64_t order = t_->q - 1;
  return Elem{t_->exp[(std::uint64_t{t_->log[a.rep]} * (e % order)) % order]};
}

Elem Field::from_int(long long v) const {
  long long p = t_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(t_->q);
  for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = Elem{i};
  return out;
}

FieldElem::FieldElem(Field f, Elem e) : f_(std::move(f)), e_(e) {
  if (!f_.contains(e_)) throw FieldError("element encoding out of range");
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!(f_ == o.f_)) throw FieldError("operands from different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return {f_, f_.add(e_, o.e_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return {f_, f_.sub(e_, o.e_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return {f_, f_.mul(e_, o.e_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return {f_, f_.div(e_, o.e_)};
}

Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x66637963u};
  return Rng(seq);
}

}  // namespace fcyc
