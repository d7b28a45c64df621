#include "fcyc/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "fcyc/partitions.hpp"
#include "fcyc/poly.hpp"

namespace fcyc {

namespace {

// |GL(n,Q)| a_n(Q): nilpotent count minus the regular nilpotent class.
QPoly scaled_a_poly(unsigned n) {
  if (n == 0) return QPoly::constant(1);
  if (n == 1) return {};
  QPoly reg = QPoly::monomial(1, (n - 1) * (n - 2) / 2);
  for (unsigned i = 2; i <= n; ++i) reg = reg * (QPoly::monomial(1, i) - QPoly::constant(1));
  return QPoly::monomial(1, n * n - n) - reg;
}

Integer scaled_a_at(unsigned j, const Integer& Q) {
  if (j == 0) return 1;
  if (j == 1) return 0;
  Integer reg = ipow(Q, (j - 1) * (j - 2) / 2);
  for (unsigned i = 2; i <= j; ++i) reg *= ipow(Q, i) - 1;
  return ipow(Q, j * j - j) - reg;
}

// Values |GL(k,x)| [u^k] Unc at the integer x, for k = 0..top.
//
// Series are held in the basis F^_k = k! |GL(k,x)| F_k, where products and
// the power recurrence for A^alpha stay integral.
std::vector<Integer> scaled_values_at(unsigned top, const Integer& x) {
  const unsigned N = top;
  std::vector<Integer> fact(N + 1, 1);
  for (unsigned k = 1; k <= N; ++k) fact[k] = fact[k - 1] * k;
  std::vector<Integer> xp(N * N + 1, 1);
  for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x;
  // B(k,i) = x^(i(k-i)) [k choose i]_x = |GL(k)| / (|GL(i)| |GL(k-i)|)
  std::vector<std::vector<Integer>> gauss(N + 1), B(N + 1), binom(N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    gauss[k].assign(k + 1, 1);
    binom[k].assign(k + 1, 1);
    for (unsigned i = 1; i < k; ++i) {
      gauss[k][i] = gauss[k - 1][i - 1] + xp[i] * gauss[k - 1][i];
      binom[k][i] = binom[k - 1][i - 1] + binom[k - 1][i];
    }
    B[k].resize(k + 1);
    for (unsigned i = 0; i <= k; ++i) B[k][i] = xp[i * (k - i)] * gauss[k][i];
  }

  std::vector<Integer> acc(N + 1, 0);
  acc[0] = 1;
  for (unsigned r = 1; 2 * r <= N; ++r) {
    const Integer alpha = count_irreducibles(r, x);
    const Integer Q = ipow(x, r);
    std::vector<Integer> f(N + 1, 0);
    for (unsigned j = 2; r * j <= N; ++j) {
      Integer R = ipow(x, r * j * j * (r - 1) / 2);
      for (unsigned i = 1; i <= r * j; ++i)
        if (i % r) R *= xp[i] - 1;
      f[r * j] = R * scaled_a_at(j, Q);
    }
    std::vector<Integer> g(N + 1, 0);
    g[0] = 1;
    for (unsigned k = r; k <= N; k += r) {
      Integer s = 0;
      for (unsigned i = 2 * r; i <= k; i += r) {
        if (g[k - i] == 0 || f[i] == 0) continue;
        Integer term = (alpha + 1) * i - k;
        term *= B[k][i];
        term *= fact[k - 1] / fact[k - i];
        term *= f[i];
        term *= g[k - i];
        s += term;
      }
      g[k] = s;
    }
    std::vector<Integer> next(N + 1, 0);
    for (unsigned k = 0; k <= N; ++k) {
      Integer s = 0;
      for (unsigned i = 0; i <= k; ++i) {
        if (acc[i] == 0 || g[k - i] == 0) continue;
        s += binom[k][i] * B[k][i] * acc[i] * g[k - i];
      }
      next[k] = s;
    }
    acc = std::move(next);
  }
  for (unsigned k = 0; k <= N; ++k) {
    if (acc[k] % fact[k] != 0) throw std::logic_error("scaled coefficient not divisible by k!");
    acc[k] /= fact[k];
  }
  return acc;
}

// Integer polynomial through (i, y[i]) for i = 0..D. Aborts unless the
// result has integer coefficients and degree below `max_degree + 1`.
QPoly interpolate(const std::vector<Integer>& y, unsigned D, int max_degree) {
  std::vector<Integer> diff(y.begin(), y.begin() + D + 1);
  std::vector<Integer> lead(D + 1);
  for (unsigned k = 0; k <= D; ++k) {
    lead[k] = diff[0];
    for (unsigned i = 0; i + k < D; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  for (unsigned k = static_cast<unsigned>(max_degree + 1); k <= D; ++k)
    if (lead[k] != 0) throw std::logic_error("interpolated degree exceeds the expected bound");
  std::vector<Integer> fact(D + 1, 1);
  for (unsigned k = 1; k <= D; ++k) fact[k] = fact[k - 1] * k;
  // Horner in the Newton basis, scaled by D!.
  std::vector<Integer> p{lead[D]};
  for (unsigned k = D; k-- > 0;) {
    p.push_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i - 1] - p[i] * k;
    p[0] = -p[0] * k;
    p[0] += lead[k] * (fact[D] / fact[k]);
  }
  std::vector<Rational> c;
  for (auto& v : p) {
    if (v % fact[D] != 0) throw std::logic_error("interpolated coefficient is not an integer");
    c.emplace_back(v / fact[D]);
  }
  return QPoly(std::move(c));
}

unsigned points_needed(unsigned k) { return k < 2 ? 1 : k * k - k; }

}  // namespace

RatFunc a_n(unsigned n) {
  if (n == 0) return RatFunc(1);
  return RatFunc(scaled_a_poly(n), gl_order_poly(n));
}

RatFunc a_n_partition_sum(unsigned n) {
  if (n == 0) return RatFunc(1);
  RatFunc s;
  for (const auto& p : enumerate_partitions(n, PartitionFilter::at_least_two_parts))
    s = s + RatFunc(QPoly::constant(1), centralizer_order_poly(p));
  return s;
}

RatFunc ratfunc_subst_qr(const RatFunc& f, unsigned r) {
  if (r < 1) throw std::domain_error("substitution power must be at least 1");
  return f.subst_power(r);
}

Series Series::one(unsigned order) {
  Series s(order);
  s[0] = RatFunc(1);
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= s.order(); ++k) {
    RatFunc t;
    for (unsigned i = 0; i <= k; ++i) {
      if (a[i].is_zero() || b[k - i].is_zero()) continue;
      t = t + a[i] * b[k - i];
    }
    s[k] = t;
  }
  return s;
}

Series operator*(const RatFunc& c, const Series& a) {
  Series s(a.order());
  for (unsigned k = 0; k <= a.order(); ++k)
    if (!a[k].is_zero()) s[k] = c * a[k];
  return s;
}

Series unc_series(unsigned order) {
  Series total = Series::one(order);
  for (unsigned r = 1; 2 * r <= order; ++r) {
    // A(q^r, u^r) - 1
    Series b(order);
    for (unsigned j = 2; r * j <= order; ++j) b[r * j] = ratfunc_subst_qr(a_n(j), r);
    const QPoly count = count_irreducibles_poly(r);
    // (1 + b)^count = sum_k binom(count, k) b^k, with b = O(u^(2r)).
    Series power = Series::one(order);
    Series factor = Series::one(order);
    QPoly binom = QPoly::constant(1);
    for (unsigned k = 1; 2 * r * k <= order; ++k) {
      power = power * b;
      binom = Rational(1, k) * (binom * (count - QPoly::constant(k - 1)));
      factor = factor + RatFunc(binom) * power;
    }
    total = total * factor;
  }
  return total;
}

Integer unc_at(unsigned n, const Integer& x) { return scaled_values_at(n, x)[n]; }

std::vector<QPoly> unc_polys(unsigned max_n, unsigned jobs) {
  const unsigned D = points_needed(max_n);
  std::vector<std::vector<Integer>> values(D + 1);
  jobs = std::max(1u, std::min(jobs, D + 1));
  auto work = [&](unsigned w) {
    for (unsigned x = w; x <= D; x += jobs) values[x] = scaled_values_at(max_n, Integer(x));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<QPoly> out;
  for (unsigned k = 0; k <= max_n; ++k) {
    const unsigned Dk = points_needed(k);
    std::vector<Integer> y(Dk + 1);
    for (unsigned x = 0; x <= Dk; ++x) y[x] = values[x][k];
    const int max_deg = k < 2 ? 0 : static_cast<int>(k * k - k - 1);
    out.push_back(interpolate(y, Dk, max_deg));
  }
  return out;
}

QPoly unc_poly(unsigned n, unsigned jobs) { return unc_polys(n, jobs).back(); }

}  // namespace fcyc
