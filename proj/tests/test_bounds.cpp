#include <doctest.h>

#include <random>

#include "fcyc/bounds.hpp"
#include "fcyc/genfun.hpp"

using namespace fcyc;

namespace {
Rational R(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("omega") {
  CHECK(omega(2, 2) == Rational(3, 8));
  CHECK(omega(1, 5) == Rational(4, 5));
  CHECK_THROWS_AS(omega(3, 1), std::invalid_argument);
  Interval w = omega_inf(2);
  CHECK(w.lo > R("0.28869"));
  CHECK(w.hi < R("0.2890"));
  CHECK(omega_inf(2, 30).width() < w.width());
  CHECK(omega_inf(2, 30).lo >= w.lo);
  for (unsigned q = 2; q <= 9; ++q) {
    const Rational a = 1 - Rational(1, q);
    for (unsigned n = 1; n <= 50; ++n) {
      Rational o = omega(n, q);
      CHECK(o > a * a);
      CHECK(o <= a);
    }
    Interval inf = omega_inf(q);
    CHECK(inf.lo > a * a);
    CHECK(inf.lo > 1 - Rational(1, q) - Rational(1, q * q));
    CHECK(inf.contains(omega(200, q)) == true);
  }
}

TEST_CASE("c0") {
  for (unsigned q = 2; q <= 9; ++q) {
    CHECK(c0(2, q) == 1);
    const Rational iq(1, q);
    CHECK(c0(3, q) == 1 + iq - iq * iq * iq);
    for (unsigned n = 3; n <= 30; ++n) {
      CHECK(c0(n, q) >= 1 + iq - iq * iq * iq);
      CHECK(c0(n, q) < 1 + iq + iq * iq);
    }
    CHECK(c0_inf(q).contains(c0(200, q)));
  }
  CHECK(c0_inf(2).hi < R("1.691"));
}

TEST_CASE("r and c1") {
  CHECK(r_nqd(4, 2, 1) == 3152);
  CHECK(r_nqd(4, 2, 2) == 112);
  CHECK(r_nqd(4, 2, 4) == 0);
  CHECK(r_nq(4, 2) == 3264);
  CHECK(c1(4, 2) == Rational(51, 32));
  CHECK_THROWS_AS(r_nqd(4, 2, 3), std::invalid_argument);
  CHECK(c1(2, 7) == c0(2, 7));
  CHECK(c1(5, 2) == c0(5, 2));
  CHECK(c1(5, 2) == Rational(6619, 4096));
  const Rational table[] = {Rational(4, 3), Rational(44, 21), Rational(272, 105), Rational(26476, 9765)};
  for (unsigned k = 2; k <= 5; ++k) CHECK(c1(k, 2) / (2 * omega(k, 2)) == table[k - 2]);
  // A prime n has only d = 1 contributing.
  for (unsigned n : {2u, 3u, 5u, 7u}) CHECK(r_nq(n, 3) == r_nqd(n, 3, 1));
}

TEST_CASE("logarithm enclosure") {
  Interval l = neg_log1m(Rational(1, 2));
  CHECK(l.lo < R("0.69314718056"));
  CHECK(l.hi > R("0.69314718055"));
  CHECK(l.width() < R("1e-15"));
  CHECK_THROWS_AS(neg_log1m(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(neg_log1m(Rational(1)), std::invalid_argument);
}

TEST_CASE("c* and rho") {
  CHECK(c_star(2).hi < R("1.83"));
  CHECK(c_star(3).hi < R("1.56"));
  for (unsigned q = 3; q <= 23; ++q) {
    const Rational iq(1, q);
    CHECK(c_star(q).hi < 1 + R("1.5") * iq + Rational(2, 3) * iq * iq);
    CHECK(c_star(q).lo <= c_star(q).hi);
  }
  CHECK(rho(3).hi < R("1.59"));
  CHECK(rho(4).hi <= R("1.38"));
  for (unsigned q = 4; q <= 23; ++q) {
    const Rational iq(1, q);
    CHECK(rho(q).hi < 1 + iq + 2 * iq * iq);
  }
}

TEST_CASE("lemma positivity") {
  using V = std::vector<Rational>;
  CHECK(lemma_positive(V{0, 1}, 7, V{0, 0, 0, 0, 0, 0, 3}, 2));
  CHECK_FALSE(lemma_positive(V{1}, 5, V{0, 0, 0, 0, 5}, 2));
  CHECK(lemma_positive(V{1}, 5, V{0, 0, 0, 0, 5}, 5));
  CHECK(lemma_positive(V{1}, 3, V{}, 0));
  CHECK_THROWS_AS(lemma_positive(V{-1}, 3, V{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma_positive(V{1}, 3, V{0, 0, 0, 1}, 0), std::invalid_argument);
}

TEST_CASE("certify_nonneg") {
  QPoly d5({0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 1, 3, R("65/32"), R("21/16"), R("1/4"), R("1/2"),
            R("1/2")});
  NonnegCertificate c = certify_nonneg(d5, 2);
  CHECK(c.holds);
  CHECK_FALSE(c.counterexample);
  NonnegCertificate neg = certify_nonneg(QPoly::constant(-1), 2);
  CHECK_FALSE(neg.holds);
  CHECK_THROWS_AS(certify_nonneg(QPoly::from_ints({0, -1}), 2), std::invalid_argument);
  NonnegCertificate zeros = certify_nonneg(QPoly::from_ints({6, -5, 1}), 2);
  CHECK(zeros.holds);
  NonnegCertificate dip = certify_nonneg(QPoly::from_ints({-1, 0, 0, 1}) - QPoly::from_ints({0, 0, 5}), 2);
  CHECK_FALSE(dip.holds);
  REQUIRE(dip.counterexample);
  CHECK(*dip.counterexample == 2);
  CHECK(certify_nonneg(QPoly(), 2).tail_method == "zero");

  // Soundness on random polynomials.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> co;
    int deg = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < deg; ++i) co.emplace_back(static_cast<long>(rng() % 41) - 20);
    co.emplace_back(1 + static_cast<long>(rng() % 3));
    QPoly p(co);
    NonnegCertificate r = certify_nonneg(p, 2);
    if (r.holds) {
      for (int k = 0; k < 200; ++k) CHECK(p.eval(Integer(2 + static_cast<long>(rng() % 100000))) >= 0);
      for (int x = 2; x < 60; ++x) CHECK(p.eval(x) >= 0);
    } else {
      REQUIRE(r.counterexample);
      CHECK(p.eval(*r.counterexample) < 0);
    }
  }
}

TEST_CASE("conjecture for small n") {
  auto polys = unc_polys(16, 4);
  for (unsigned n = 1; n <= 16; ++n) {
    CAPTURE(n);
    ConjectureResult r = conjecture_check(n, polys[n]);
    CHECK(r.cert.holds);
    // d is a positive multiple of the conjectured gap; check it at a few points.
    for (unsigned q = 2; q <= 6; ++q) {
      Rational gap = rpow(Rational(q), static_cast<long>(n * n) - static_cast<long>(n) - 1) *
                         rpow(1 + Rational(1, 2 * q), n) -
                     polys[n].eval(q);
      CHECK(sgn(r.d.eval(q)) == sgn(gap));
    }
  }
  CHECK(conjecture_check(5).cert.holds);
}

TEST_CASE("bound reports") {
  auto polys = unc_polys(12, 4);
  for (unsigned n = 4; n <= 12; ++n)
    for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
      BoundReport b = bound_report(n, q, polys[n]);
      CAPTURE(n);
      CAPTURE(q);
      CHECK(b.lower_holds.value());
      CHECK(b.upper_holds.value());
      CHECK(b.lower < Rational(*b.actual));
    }
  BoundReport small = bound_report(3, 2, polys[3]);
  CHECK(*small.actual == 44);
  CHECK(small.lower == 44);
  CHECK_FALSE(small.lower_holds.value());
  BoundReport five = bound_report(5, 4, polys[5]);
  CHECK(five.lower_holds.value());
  CHECK(five.upper_holds.value());
  CHECK_FALSE(bound_report(5, 4, std::nullopt).lower_holds);
  for (unsigned n = 3; n <= 12; ++n) {
    CHECK(bound_report(n, 2, polys[n]).upper_holds.value());
    CHECK(bound_report(n, 3, polys[n]).upper_holds.value());
  }
  CHECK(Rational(polys[10].eval(2)) / rpow(Rational(2), 100) < R("0.915") * rpow(R("0.983"), 10));
  CHECK_THROWS_AS(bound_report(2, 2, std::nullopt), std::invalid_argument);
}
