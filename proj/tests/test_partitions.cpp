#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fcyc/partitions.hpp"
#include "fcyc/poly.hpp"
#include "oracles.hpp"

using namespace fcyc;

namespace {
using V = std::vector<unsigned>;

Partition random_partition(Rng& rng, unsigned maxsize) {
  unsigned n = static_cast<unsigned>(uniform_below(rng, maxsize + 1));
  V parts;
  while (n) {
    unsigned p = 1 + static_cast<unsigned>(uniform_below(rng, n));
    parts.push_back(p);
    n -= p;
  }
  return Partition(parts);
}

// All monic irreducibles over GF(q) of degree <= n.
std::vector<Poly> irreducibles(const Field& f, unsigned n) {
  std::vector<Poly> out;
  for (unsigned d = 1; d <= n; ++d)
    for (const auto& m : oracle::monics(f, d))
      if (is_irreducible(m)) out.push_back(m);
  return out;
}

// Sum of orbit sizes over all types of dimension n.
Integer class_equation_sum(const std::vector<Poly>& irr, std::size_t i, unsigned left,
                           std::vector<TypeShape>& shapes, unsigned n, const Integer& q) {
  if (left == 0) return orbit_size(shapes, n, q);
  if (i == irr.size()) return 0;
  Integer total = class_equation_sum(irr, i + 1, left, shapes, n, q);
  const unsigned d = static_cast<unsigned>(irr[i].degree());
  for (unsigned s = 1; s * d <= left; ++s) {
    for (const auto& lam : enumerate_partitions(s)) {
      shapes.push_back({d, lam});
      total += class_equation_sum(irr, i + 1, left - s * d, shapes, n, q);
      shapes.pop_back();
    }
  }
  return total;
}
}  // namespace

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{5, 3, 3, 1}) == Partition{4, 3, 3, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{4}) == Partition{1, 1, 1, 1});
  CHECK(Partition{1, 3, 0, 3, 5}.parts() == V{5, 3, 3, 1});
  CHECK(Partition{5, 3, 3, 1}.to_string() == "5,3,3,1");
  CHECK_THROWS_AS(Partition::parse("1,3,3,5"), std::invalid_argument);
  CHECK(Partition::parse("") == Partition{});
  Rng rng = derive_rng(4, 0);
  for (int t = 0; t < 200; ++t) {
    Partition p = random_partition(rng, 40);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(Partition::parse(p.to_string()) == p);
  }
}

TEST_CASE("partition vectors") {
  auto v = partition_vectors(Partition{5, 3, 3, 1});
  CHECK(v.m == V{1, 0, 2, 0, 1});
  CHECK(v.ell == V{4, 7, 10, 11, 12});
  CHECK(v.e == V{3, 1});
  auto w = partition_vectors(Partition{1, 1});
  CHECK(w.m == V{2});
  CHECK(w.ell == V{2});
  CHECK(w.e == V{1, 1});
  auto s = partition_vectors(Partition{4});
  CHECK(s.m == V{0, 0, 0, 1});
  CHECK(s.ell == V{1, 2, 3, 4});
  CHECK(s.e == V{1});
}

TEST_CASE("partition identities on random partitions") {
  Rng rng = derive_rng(5, 0);
  for (int t = 0; t < 500; ++t) {
    Partition p = random_partition(rng, 40);
    CAPTURE(p.to_string());
    Partition c = conjugate(p);
    auto v = partition_vectors(p);
    const unsigned n = p.size();
    const unsigned l1 = p[0];
    // (a)
    unsigned weighted = 0;
    for (unsigned i = 1; i <= v.m.size(); ++i) weighted += i * v.m[i - 1];
    CHECK(weighted == n);
    CHECK(c.size() == n);
    // (b)
    REQUIRE(v.m.size() == l1);
    for (unsigned i = 1; i <= l1; ++i) CHECK(v.m[i - 1] == c[i - 1] - c[i]);
    // (c): l_i = sum_{j<i} j m_j + i sum_{j>=i} m_j
    REQUIRE(v.ell.size() == l1);
    unsigned running = 0;
    for (unsigned i = 1; i <= l1; ++i) {
      running += c[i - 1];
      unsigned alt = 0;
      for (unsigned j = 1; j <= l1; ++j) alt += std::min(i, j) * v.m[j - 1];
      CHECK(v.ell[i - 1] == running);
      CHECK(v.ell[i - 1] == alt);
    }
    // (d)
    unsigned long dot = 0;
    for (unsigned i = 0; i < l1; ++i) dot += static_cast<unsigned long>(v.m[i]) * v.ell[i];
    CHECK(dot == conjugate_norm2(p));
    CHECK(dot % 2 == n % 2);
    // (e)
    for (unsigned k = 1; k <= 45; ++k) {
      unsigned cnt = static_cast<unsigned>(std::count_if(v.m.begin(), v.m.end(), [&](unsigned x) { return x >= k; }));
      CHECK((k <= v.e.size() ? v.e[k - 1] : 0u) == cnt);
    }
    // (f)
    CHECK(conjugate_norm2(p) >= n);
    CHECK((conjugate_norm2(p) == n) == (p.length() <= 1));
    // (g)
    unsigned esum = std::accumulate(v.e.begin(), v.e.end(), 0u);
    CHECK(esum == std::accumulate(v.m.begin(), v.m.end(), 0u));
    CHECK(esum == c[0]);
  }
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order_poly(Partition{1, 1}) == QPoly::from_ints({0, 1, -1, -1, 1}));
  CHECK(centralizer_order(Partition{}, 7) == 1);
  CHECK(centralizer_order(Partition{1, 1}, 2) == 6);
  for (unsigned n = 1; n <= 6; ++n)
    for (int q : {2, 3, 5})
      CHECK(centralizer_order(Partition{n}, q) == ipow(q, n) - ipow(q, n - 1));
  Rng rng = derive_rng(6, 0);
  for (int t = 0; t < 100; ++t) {
    Partition p = random_partition(rng, 14);
    QPoly sym = centralizer_order_poly(p);
    for (int q : {2, 3, 4, 7}) CHECK(sym.eval(q) == Rational(centralizer_order(p, q)));
    // Product form from the multiplicities.
    auto v = partition_vectors(p);
    Integer direct = 1;
    for (unsigned i = 0; i < v.m.size(); ++i)
      for (unsigned k = 1; k <= v.m[i]; ++k) direct *= ipow(3, v.ell[i]) - ipow(3, v.ell[i] - k);
    CHECK(direct == centralizer_order(p, 3));
  }
  for (unsigned n = 0; n <= 6; ++n) {
    Integer g = 1;
    for (unsigned i = 0; i < n; ++i) g *= ipow(5, n) - ipow(5, i);
    CHECK(gl_order(n, 5) == g);
    CHECK(gl_order_poly(n).eval(5) == Rational(g));
  }
}

TEST_CASE("centralizer table closed forms") {
  const QPoly q = QPoly::var();
  const QPoly one = QPoly::constant(1);
  auto qp = [&](unsigned e) { return QPoly::monomial(1, e); };
  // q^a prod (1 - q^-k)^{e_k} with the negative powers cleared
  auto form = [&](unsigned a, std::vector<unsigned> ks) {
    QPoly r = qp(a);
    for (unsigned k : ks) r = exact_div(r * (qp(k) - one), qp(k));
    return r;
  };
  for (unsigned l1 = 1; l1 <= 6; ++l1)
    for (unsigned l2 = 1; l2 < l1; ++l2) {
      CHECK(centralizer_order_poly(Partition{l1, l2}) == form(l1 + l2 + 2 * l2, {1, 1}));
      CHECK(centralizer_order_poly(Partition{l1, l2, l2}) == form(l1 + 2 * l2 + 6 * l2, {1, 1, 2}));
      CHECK(centralizer_order_poly(Partition{l1, l1, l2}) == form(2 * (2 * l1 + l2) + 3 * l2, {1, 1, 2}));
      for (unsigned l3 = 1; l3 < l2; ++l3)
        CHECK(centralizer_order_poly(Partition{l1, l2, l3}) ==
              form(l1 + l2 + l3 + 2 * l2 + 4 * l3, {1, 1, 1}));
    }
  for (unsigned l1 = 1; l1 <= 6; ++l1) {
    CHECK(centralizer_order_poly(Partition{l1, l1}) == form(4 * l1, {1, 2}));
    for (unsigned k = 1; k <= 4; ++k) {
      std::vector<unsigned> ks;
      for (unsigned i = 1; i <= k; ++i) ks.push_back(i);
      CHECK(centralizer_order_poly(Partition(V(k, l1))) == form(l1 * k * k, ks));
    }
  }
}

TEST_CASE("enumerating partitions") {
  using P = Partition;
  CHECK(enumerate_partitions(5, PartitionFilter::no_part_one) == std::vector<P>{P{5}, P{3, 2}});
  CHECK(enumerate_partitions(4, PartitionFilter::at_least_two_parts) ==
        std::vector<P>{P{3, 1}, P{2, 2}, P{2, 1, 1}, P{1, 1, 1, 1}});
  CHECK(enumerate_partitions(0) == std::vector<P>{P{}});
  CHECK(enumerate_partitions(4) == std::vector<P>{P{4}, P{3, 1}, P{2, 2}, P{2, 1, 1}, P{1, 1, 1, 1}});
  const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned n = 0; n <= 10; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(all.size() == counts[n]);
    CHECK(std::adjacent_find(all.begin(), all.end(), [](const P& a, const P& b) { return !(b < a); }) == all.end());
    for (const auto& p : enumerate_partitions(n, PartitionFilter::no_part_one)) CHECK((p.empty() || p.parts().back() >= 2));
    for (const auto& p : enumerate_partitions(n, PartitionFilter::at_least_two_parts)) CHECK(p.length() >= 2);
  }
}

TEST_CASE("orbit sizes") {
  std::vector<TypeShape> zero{{1, Partition{1, 1}}};
  CHECK(orbit_size(zero, 2, 2) == 1);
  std::vector<TypeShape> unip{{1, Partition{2}}};
  CHECK(orbit_size(unip, 2, 2) == 3);
  std::vector<TypeShape> irr{{2, Partition{1}}};
  CHECK(orbit_size(irr, 2, 2) == 2);
  CHECK_THROWS_AS(orbit_size(irr, 3, 2), std::invalid_argument);
}

TEST_CASE("class equation") {
  for (unsigned q : {2u, 3u}) {
    Field f = Field::make(q, 1);
    for (unsigned n = 1; n <= 3; ++n) {
      auto irr = irreducibles(f, n);
      std::vector<TypeShape> shapes;
      CHECK(class_equation_sum(irr, 0, n, shapes, n, q) == ipow(q, n * n));
    }
  }
}
