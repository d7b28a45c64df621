#include "fcyc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcyc {

namespace {

void check_same(const Mat& a, const Mat& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix dimension mismatch");
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_reps(const Field& f, std::size_t n, std::initializer_list<std::uint32_t> reps) {
  return from_reps(f, n, std::vector<std::uint32_t>(reps));
}

Mat Mat::from_reps(const Field& f, std::size_t n, const std::vector<std::uint32_t>& reps) {
  if (reps.size() != n * n) throw std::invalid_argument("expected n*n entries");
  Mat m(f, n);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!f.contains(Elem{reps[i]})) throw FieldError("matrix entry outside field");
    m.a_[i] = Elem{reps[i]};
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e.rep == 0; });
}

Mat mul(const Mat& a, const Mat& b, OpCounter* ops) {
  check_same(a, b);
  const Field& f = a.field();
  const std::size_t n = a.n();
  Mat c(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem* ci = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      Elem s = a(i, k);
      if (s.rep == 0) continue;
      const Elem* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) ci[j] = f.add(ci[j], f.mul(s, bk[j]));
    }
  }
  if (ops) ops->ops += 2 * n * n * n;
  return c;
}

Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }

Mat operator+(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat c(a.field(), a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat c(a.field(), a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

Mat scale(const Mat& a, Elem s) {
  Mat c(a.field(), a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a.field().mul(a(i, j), s);
  return c;
}

Vec vec_mat(const Vec& v, const Mat& x, OpCounter* ops) {
  if (v.size() != x.n()) throw std::invalid_argument("vector length mismatch");
  const Field& f = x.field();
  const std::size_t n = x.n();
  Vec out(n, f.zero());
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].rep == 0) continue;
    const Elem* xk = x.row(k);
    for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(v[k], xk[j]));
  }
  if (ops) ops->ops += 2 * n * n;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.rep == 0; });
}

Poly char_poly(const Mat& x) {
  const Field& f = x.field();
  const std::size_t n = x.n();
  Mat h = x;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1).rep == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Elem inv = f.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      Elem u = f.mul(h(i, m - 1), inv);
      if (u.rep == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.add(h(r, m), f.mul(u, h(r, i)));
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::one(f));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = Poly::linear(f, h(k - 1, k - 1)) * p[k - 1];
    Elem prod = f.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod.rep == 0) break;
      Elem c = f.mul(h(i, k - 1), prod);
      if (c.rep) next = next - scale(p[i], c);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

// GF(2) spinning on bit-packed rows: same elimination, 64 entries per word.
Spin spin_gf2(const Vec& v, const Mat& x, OpCounter* ops) {
  const Field& f = x.field();
  const std::size_t n = x.n();
  const std::size_t words = (n + 63) / 64;
  const std::size_t cwords = (n + 64) / 64;
  auto bit = [](const std::uint64_t* w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; };

  std::vector<std::uint64_t> xm(n * words, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x(i, j).rep) xm[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<std::uint64_t> w(words, 0), r(words), comb(cwords);
  for (std::size_t j = 0; j < n; ++j)
    if (v[j].rep) w[j / 64] |= std::uint64_t{1} << (j % 64);

  // Echelon rows and their Krylov combinations, stored contiguously.
  std::vector<std::uint64_t> br, bc;
  std::vector<std::size_t> pivots;
  br.reserve(n * words);
  bc.reserve(n * cwords);
  Spin out;
  for (std::size_t k = 0; k <= n; ++k) {
    r = w;
    std::fill(comb.begin(), comb.end(), 0);
    comb[k / 64] |= std::uint64_t{1} << (k % 64);
    for (std::size_t b = 0; b < pivots.size(); ++b) {
      if (!bit(r.data(), pivots[b])) continue;
      const std::uint64_t* rb = br.data() + b * words;
      const std::uint64_t* cb = bc.data() + b * cwords;
      for (std::size_t j = pivots[b] / 64; j < words; ++j) r[j] ^= rb[j];
      for (std::size_t j = 0; j <= b / 64; ++j) comb[j] ^= cb[j];
      if (ops) ops->ops += n + b + 1;
    }
    std::size_t piv = 0;
    while (piv < n && !bit(r.data(), piv)) ++piv;
    if (piv == n) {
      std::vector<Elem> c(k + 1);
      for (std::size_t j = 0; j <= k; ++j) c[j] = Elem{static_cast<std::uint32_t>(bit(comb.data(), j))};
      out.order = Poly(f, std::move(c));
      return out;
    }
    br.insert(br.end(), r.begin(), r.end());
    bc.insert(bc.end(), comb.begin(), comb.end());
    pivots.push_back(piv);
    Vec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Elem{static_cast<std::uint32_t>(bit(w.data(), j))};
    out.rows.push_back(std::move(row));
    std::vector<std::uint64_t> next(words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!bit(w.data(), i)) continue;
      const std::uint64_t* xi = xm.data() + i * words;
      for (std::size_t j = 0; j < words; ++j) next[j] ^= xi[j];
    }
    if (ops) ops->ops += n * n;
    w = std::move(next);
  }
  throw std::logic_error("Krylov sequence did not close");
}

}  // namespace

Spin spin(const Vec& v, const Mat& x, OpCounter* ops) {
  const Field& f = x.field();
  const std::size_t n = x.n();
  if (v.size() != n) throw std::invalid_argument("vector length mismatch");
  if (f.q() == 2) return spin_gf2(v, x, ops);
  struct Row {
    Vec r;
    Vec comb;  // coefficients over the Krylov rows
    std::size_t pivot;
  };
  std::vector<Row> basis;
  Spin out;
  Vec w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec r = w;
    Vec comb(k + 1, f.zero());
    comb[k] = f.one();
    for (const auto& b : basis) {
      Elem s = r[b.pivot];
      if (s.rep == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] = f.sub(r[j], f.mul(s, b.r[j]));
      for (std::size_t j = 0; j < b.comb.size(); ++j) comb[j] = f.sub(comb[j], f.mul(s, b.comb[j]));
      if (ops) ops->ops += 2 * (n + b.comb.size());
    }
    std::size_t piv = 0;
    while (piv < n && r[piv].rep == 0) ++piv;
    if (piv == n) {
      out.order = Poly(f, std::move(comb));
      return out;
    }
    const Elem inv = f.inv(r[piv]);
    for (auto& e : r) e = f.mul(e, inv);
    for (auto& e : comb) e = f.mul(e, inv);
    basis.push_back({std::move(r), std::move(comb), piv});
    out.rows.push_back(w);
    w = vec_mat(w, x, ops);
  }
  throw std::logic_error("Krylov sequence did not close");
}

Poly ord_vector(const Vec& v, const Mat& x) { return spin(v, x).order; }

Vec apply_poly(const Spin& s, const Poly& g, OpCounter* ops) {
  const Field& f = s.order.field();
  if (g.degree() >= static_cast<int>(s.rows.size()))
    throw std::invalid_argument("polynomial degree exceeds stored Krylov rows");
  const std::size_t n = s.rows.empty() ? 0 : s.rows[0].size();
  Vec u(n, f.zero());
  for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
    Elem c = g[j];
    if (c.rep == 0) continue;
    for (std::size_t i = 0; i < n; ++i) u[i] = f.add(u[i], f.mul(c, s.rows[j][i]));
    if (ops) ops->ops += 2 * n;
  }
  return u;
}

Vec unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

Poly min_poly(const Mat& x) {
  const Field& f = x.field();
  Poly m = Poly::one(f);
  for (std::size_t i = 0; i < x.n(); ++i) m = lcm(m, ord_vector(unit_vector(f, x.n(), i), x));
  return m;
}

Mat eval_poly(const Poly& g, const Mat& x) {
  const Field& f = x.field();
  Mat acc(f, x.n());
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    acc = mul(acc, x);
    for (std::size_t i = 0; i < x.n(); ++i) acc(i, i) = f.add(acc(i, i), g[k]);
  }
  return acc;
}

std::size_t rank(Mat a) {
  const Field& f = a.field();
  const std::size_t n = a.n();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a(piv, c).rep == 0) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
    const Elem inv = f.inv(a(r, c));
    for (std::size_t i = r + 1; i < n; ++i) {
      Elem u = f.mul(a(i, c), inv);
      if (u.rep == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(u, a(r, j)));
    }
    ++r;
  }
  return r;
}

std::size_t nullity(const Mat& a) { return a.n() - rank(a); }

Mat inverse(const Mat& a) {
  const Field& f = a.field();
  const std::size_t n = a.n();
  Mat m = a;
  Mat inv = Mat::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).rep == 0) ++piv;
    if (piv == n) throw FieldError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(piv, j), m(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    const Elem s = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).rep == 0) continue;
      Elem u = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(u, m(c, j)));
        inv(i, j) = f.sub(inv(i, j), f.mul(u, inv(c, j)));
      }
    }
  }
  return inv;
}

Mat companion(const Poly& fpoly) {
  if (!fpoly.is_monic() || fpoly.degree() < 1)
    throw std::invalid_argument("companion matrix needs a monic non-constant polynomial");
  const Field& f = fpoly.field();
  const std::size_t d = static_cast<std::size_t>(fpoly.degree());
  Mat c(f, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i, i + 1) = f.one();
  for (std::size_t j = 0; j < d; ++j) c(d - 1, j) = f.neg(fpoly[j]);
  return c;
}

Mat block_diag(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("no blocks");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == blocks[0].field())) throw std::invalid_argument("blocks over different fields");
    n += b.n();
  }
  Mat m(blocks[0].field(), n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) m(off + i, off + j) = b(i, j);
    off += b.n();
  }
  return m;
}

Mat random_matrix(std::size_t n, const Field& f, Rng& rng) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be at least 1");
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
  return m;
}

Vec random_vector(std::size_t n, const Field& f, Rng& rng) {
  Vec v(n);
  for (auto& e : v) e = f.random(rng);
  return v;
}

std::string MatrixType::to_string() const {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += ' ';
    s += "(" + e.h.to_string() + ")^[" + e.lambda.to_string() + "]";
  }
  return s;
}

std::vector<TypeShape> MatrixType::shapes() const {
  std::vector<TypeShape> out;
  for (const auto& e : entries) out.push_back({static_cast<unsigned>(e.h.degree()), e.lambda});
  return out;
}

Poly MatrixType::char_poly(const Field& f) const {
  Poly p = Poly::one(f);
  for (const auto& e : entries) p = p * pow(e.h, e.lambda.size());
  return p;
}

Poly MatrixType::min_poly(const Field& f) const {
  Poly p = Poly::one(f);
  for (const auto& e : entries) p = p * pow(e.h, e.lambda[0]);
  return p;
}

bool MatrixType::is_uncyclic() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const TypeEntry& e) { return e.lambda.length() >= 2; });
}

bool operator<(const MatrixType& a, const MatrixType& b) {
  return std::lexicographical_compare(
      a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
      [](const TypeEntry& x, const TypeEntry& y) {
        if (x.h == y.h) return x.lambda < y.lambda;
        return poly_less(x.h, y.h);
      });
}

MatrixType matrix_type(const Mat& x, const Factorization& cfac) {
  MatrixType t;
  for (const auto& [h, nu] : cfac.factors) {
    const std::size_t dh = static_cast<std::size_t>(h.degree());
    const Mat hx = eval_poly(h, x);
    Mat power = hx;
    std::size_t prev = 0;
    std::vector<unsigned> cols;
    for (;;) {
      std::size_t k = nullity(power);
      if (k == prev) break;
      if ((k - prev) % dh) throw std::logic_error("kernel growth not a multiple of deg h");
      cols.push_back(static_cast<unsigned>((k - prev) / dh));
      prev = k;
      if (k == nu * dh) break;
      power = mul(power, hx);
    }
    if (prev != nu * dh) throw std::logic_error("primary component dimension mismatch");
    t.entries.push_back({h, conjugate(Partition(cols))});
  }
  return t;
}

MatrixType matrix_type(const Mat& x, Rng& rng) { return matrix_type(x, factor(char_poly(x), rng)); }

FcyclicVerdict classify_fcyclic(const Mat& x, const Factorization& cfac) {
  FcyclicVerdict v;
  for (const auto& [h, nu] : cfac.factors) {
    if (nullity(eval_poly(h, x)) == static_cast<std::size_t>(h.degree())) v.cyclic_primes.push_back(h);
  }
  v.is_uncyclic = v.cyclic_primes.empty();
  return v;
}

FcyclicVerdict classify_fcyclic(const Mat& x, Rng& rng) {
  return classify_fcyclic(x, factor(char_poly(x), rng));
}

}  // namespace fcyc
