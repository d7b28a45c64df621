#include <doctest.h>

#include "fcyc/genfun.hpp"
#include "fcyc/partitions.hpp"
#include "fcyc/poly.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fcyc;

namespace {
RatFunc ratio(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RatFunc(QPoly::from_ints(num), QPoly::from_ints(den));
}
}  // namespace

TEST_CASE("a_n values") {
  CHECK(a_n(0) == RatFunc(1));
  CHECK(a_n(1) == RatFunc(0));
  CHECK(a_n(2) == ratio({1}, {0, 1, -1, -1, 1}));
  CHECK(a_n(3) == ratio({-1, 0, 1, 1}, {0, 0, -1, 1, 1, 0, -1, -1, 1}));
  CHECK(a_n(4) == ratio({1, 0, -1, -1, -1, 1, 1, 1}, {0, 0, 0, 1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1}));
  CHECK(a_n(5) == ratio({-1, 0, 1, 1, 1, 0, -1, -2, -1, 0, 1, 1, 1},
                        {0, 0, 0, 0, -1, 1, 1, 0, 0, -1, -1, -1, 1, 1, 1, 0, 0, -1, -1, 1}));
  for (unsigned n = 0; n <= 8; ++n) CHECK(a_n(n) == a_n_partition_sum(n));
  for (unsigned n = 2; n <= 7; ++n)
    for (int q : {2, 3, 7}) CHECK(a_n(n).eval(q) == oracle::a_at(n, q));
}

TEST_CASE("substitution q -> q^r") {
  CHECK(ratfunc_subst_qr(a_n(2), 2) == ratio({1}, {0, 0, 1, 0, -1, 0, -1, 0, 1}));
  CHECK(ratfunc_subst_qr(RatFunc(1), 5) == RatFunc(1));
  CHECK(ratfunc_subst_qr(RatFunc(QPoly::var()), 3) == RatFunc(QPoly::monomial(1, 3)));
}

TEST_CASE("generating function coefficients") {
  const Series s = unc_series(6);
  const RatFunc q(QPoly::var());
  CHECK(s[0] == RatFunc(1));
  CHECK(s[1] == RatFunc(0));
  CHECK(s[2] == q * a_n(2));
  const RatFunc choose2 = RatFunc(QPoly({Rational(0), Rational(-1, 2), Rational(1, 2)}));
  CHECK(s[3] == q * a_n(3));
  CHECK(s[4] == q * a_n(4) + choose2 * a_n(2) * a_n(2) +
                    RatFunc(count_irreducibles_poly(2)) * ratfunc_subst_qr(a_n(2), 2));
  CHECK(s[5] == q * a_n(5) + q * (q - RatFunc(1)) * a_n(2) * a_n(3));
  for (unsigned n = 0; n <= 6; ++n) {
    RatFunc full = s[n] * RatFunc(gl_order_poly(n));
    CHECK(full.is_polynomial());
    CHECK(full.num() == unc_poly(n));
  }
}

TEST_CASE("known values for small n") {
  auto polys = unc_polys(7, 2);
  CHECK(polys[0] == QPoly::constant(1));
  CHECK(polys[1].is_zero());
  for (const auto& [n, p] : golden::unc_table()) {
    CAPTURE(n);
    CHECK(polys[n] == p);
  }
  CHECK(unc_poly(3).to_string() == "q^5+q^4-q^2");
}

TEST_CASE("integrality and leading term") {
  auto polys = unc_polys(14, 4);
  for (unsigned n = 2; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(polys[n].is_integral());
    CHECK(polys[n].degree() == static_cast<int>(n * n - n - 1));
    CHECK(polys[n].lead() == 1);
    CHECK(polys[n] == unc_poly(n, 1 + n % 3));
  }
}

TEST_CASE("multinomial expansion agrees") {
  auto polys = unc_polys(9, 4);
  for (unsigned n = 0; n <= 9; ++n) {
    CAPTURE(n);
    // Enough points to pin down a polynomial of degree n^2-n-1.
    const unsigned points = n < 2 ? 3 : n * n - n + 1;
    for (unsigned x = 2; x < 2 + points; ++x) CHECK(Rational(oracle::unc_multinomial(n, x)) == polys[n].eval(x));
  }
}

TEST_CASE("pointwise evaluation") {
  auto polys = unc_polys(8, 2);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned x : {0u, 1u, 2u, 3u, 5u, 16u}) CHECK(Rational(unc_at(n, x)) == polys[n].eval(x));
}
