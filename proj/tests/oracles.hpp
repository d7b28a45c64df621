#pragma once

// Independent slow implementations used only to check the library.

#include <functional>
#include <vector>

#include "fcyc/bounds.hpp"
#include "fcyc/matrix.hpp"
#include "fcyc/partitions.hpp"
#include "fcyc/poly.hpp"

namespace oracle {

using namespace fcyc;

// det(tI - X) by cofactor expansion along the first row.
inline Poly cofactor_char_poly(const Mat& x) {
  const Field& f = x.field();
  const std::size_t n = x.n();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = i == j ? Poly::linear(f, x(i, j)) : Poly::constant(f, f.neg(x(i, j)));
  std::function<Poly(const std::vector<std::size_t>&, std::size_t)> det =
      [&](const std::vector<std::size_t>& cols, std::size_t row) -> Poly {
    if (cols.empty()) return Poly::one(f);
    Poly acc(f);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::size_t> rest(cols);
      rest.erase(rest.begin() + static_cast<long>(k));
      Poly term = m[row][cols[k]] * det(rest, row + 1);
      acc = k % 2 ? acc - term : acc + term;
    }
    return acc;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return det(all, 0);
}

// All monic polynomials of degree d, in encoding order.
inline std::vector<Poly> monics(const Field& f, unsigned d) {
  std::vector<Poly> out;
  std::vector<std::uint32_t> c(d + 1, 0);
  c[d] = 1;
  for (;;) {
    out.push_back(Poly::from_reps(f, std::span<const std::uint32_t>(c)));
    std::size_t i = 0;
    while (i < d && ++c[i] == f.q()) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

// Trial division by every monic polynomial of degree <= deg/2.
inline bool brute_irreducible(const Poly& p) {
  const unsigned d = static_cast<unsigned>(p.degree());
  for (unsigned k = 1; 2 * k <= d; ++k)
    for (const auto& m : monics(p.field(), k))
      if ((p % m).is_zero()) return false;
  return true;
}

// o_h(ord_X(v)) = nu(h) for some irreducible h | c_X.
inline bool witness_by_h_order(const Vec& v, const Mat& x, Rng& rng) {
  const Poly a = ord_vector(v, x);
  for (const auto& [h, nu] : factor(char_poly(x), rng).factors) {
    Valuation o = h_order(a, h);
    if (!o.is_infinite() && o.value() == nu) return true;
  }
  return false;
}

// a_j(Q) at a rational point, summed over partitions.
inline Rational a_at(unsigned j, const Integer& Q) {
  if (j == 0) return 1;
  Rational s = 0;
  for (const auto& p : enumerate_partitions(j, PartitionFilter::at_least_two_parts))
    s += Rational(Integer(1), centralizer_order(p, Q));
  return s;
}

// unc(n,q) at an integer q >= 2 from the product over degrees r of
// A(q^r, u^r)^N(r,q), each power expanded as a sum of multinomial terms over
// partitions of the exponent with no part 1.
inline Integer unc_multinomial(unsigned n, const Integer& q) {
  std::vector<Rational> total(n + 1, 0);
  total[0] = 1;
  for (unsigned r = 1; 2 * r <= n; ++r) {
    const Integer count = count_irreducibles(r, q);
    const Integer Q = ipow(q, r);
    const unsigned top = n / r;
    std::vector<Rational> a(top + 1);
    for (unsigned j = 0; j <= top; ++j) a[j] = a_at(j, Q);
    // [u^k] A^count = sum over partitions lambda of k without parts 1 of
    // count!/((count - len)! prod m_i!) prod a_{lambda_i}
    std::vector<Rational> power(top + 1, 0);
    power[0] = 1;
    for (unsigned k = 2; k <= top; ++k) {
      for (const auto& p : enumerate_partitions(k, PartitionFilter::no_part_one)) {
        auto vec = partition_vectors(p);
        Rational term = 1;
        Integer falling = 1;
        for (std::size_t i = 0; i < p.length(); ++i) falling *= count - Integer(i);
        term *= falling;
        for (unsigned mi : vec.m)
          for (unsigned t = 2; t <= mi; ++t) term /= t;
        for (unsigned part : p.parts()) term *= a[part];
        power[k] += term;
      }
    }
    std::vector<Rational> next(n + 1, 0);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned k = 0; k <= top && i + r * k <= n; ++k) next[i + r * k] += total[i] * power[k];
    total = std::move(next);
  }
  Rational v = total[n] * gl_order(n, q);
  if (v.get_den() != 1) throw std::logic_error("oracle value is not an integer");
  return v.get_num();
}

}  // namespace oracle
