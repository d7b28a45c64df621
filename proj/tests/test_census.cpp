#include <doctest.h>

#include <cmath>

#include "fcyc/bounds.hpp"
#include "fcyc/census.hpp"
#include "fcyc/genfun.hpp"
#include "fcyc/stats.hpp"

using namespace fcyc;

TEST_CASE("census counts") {
  CHECK(census(2, Field::make(2, 1)).uncyclic_count == 2);
  CHECK(census(3, Field::make(2, 1), {.jobs = 3}).uncyclic_count == 44);
  CensusResult r = census(4, Field::make(2, 1), {.jobs = 4});
  CHECK(r.total == 65536);
  CHECK(r.uncyclic_count == 3824);
  CHECK(census(1, Field::make(5, 1)).uncyclic_count == 0);
  auto polys = unc_polys(3);
  for (unsigned q : {3u, 4u, 5u}) CHECK(Rational(census(2, Field::parse(std::to_string(q))).uncyclic_count) == polys[2].eval(q));
}

TEST_CASE("census budget and job independence") {
  CHECK_THROWS_AS(census(3, Field::make(3, 1), {.budget = 1000}), BudgetError);
  CHECK_THROWS_AS(census(6, Field::make(2, 1)), BudgetError);
  Field f3 = Field::make(3, 1);
  CensusResult a = census(2, f3, {.with_types = true, .jobs = 1});
  CensusResult b = census(2, f3, {.with_types = true, .jobs = 7});
  CHECK(a.uncyclic_count == b.uncyclic_count);
  CHECK(a.per_type == b.per_type);
}

TEST_CASE("per-type counts match orbit sizes") {
  for (unsigned q : {2u, 3u}) {
    Field f = Field::make(q, 1);
    for (unsigned n = 1; n <= 3; ++n) {
      CensusResult r = census(n, f, {.with_types = true, .jobs = 4});
      std::uint64_t sum = 0, unc = 0;
      for (const auto& [type, count] : r.per_type) {
        auto shapes = type.shapes();
        CHECK(Integer(count) == orbit_size(shapes, n, q));
        sum += count;
        if (type.is_uncyclic()) unc += count;
      }
      CHECK(sum == r.total);
      CHECK(unc == r.uncyclic_count);
    }
  }
}

TEST_CASE("single-prime counts") {
  const std::pair<unsigned, unsigned> pairs[] = {{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}};
  for (auto [n, q] : pairs) {
    CAPTURE(n);
    CAPTURE(q);
    Field f = Field::make(q, 1);
    CensusResult r = census(n, f, {.with_types = true, .jobs = 4});
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      std::uint64_t count = 0;
      for (const auto& [type, c] : r.per_type)
        if (type.entries.size() == 1 && type.entries[0].h.degree() == static_cast<int>(d) && type.is_uncyclic())
          count += c;
      CHECK(Integer(count) == r_nqd(n, q, d));
    }
    // Matrices with characteristic polynomial (t-1)^n.
    if (n <= 3) {
      const Poly unipotent_root = Poly::linear(f, f.one());
      std::uint64_t unip = 0;
      for (const auto& [type, c] : r.per_type)
        if (type.entries.size() == 1 && type.entries[0].h == unipotent_root) unip += c;
      CHECK(Integer(unip) == ipow(q, n * (n - 1)));
    }
  }
}

TEST_CASE("density estimates") {
  DensityEstimate d = mc_density(4, Field::make(2, 1), 100000, 0.05, 1, 4);
  CHECK(d.lo <= 3824.0 / 65536);
  CHECK(d.hi >= 3824.0 / 65536);
  CHECK(d.lo <= d.estimate);
  CHECK(d.estimate <= d.hi);
  DensityEstimate e = mc_density(2, Field::make(5, 1), 100000, 0.05, 2, 4);
  CHECK(e.lo <= 0.008);
  CHECK(e.hi >= 0.008);
  DensityEstimate z = mc_density(1, Field::make(3, 1), 5000, 0.05, 3);
  CHECK(z.hits == 0);
  CHECK(z.estimate == 0);
  DensityEstimate j1 = mc_density(3, Field::make(2, 1), 5000, 0.05, 4, 1);
  DensityEstimate j5 = mc_density(3, Field::make(2, 1), 5000, 0.05, 4, 5);
  CHECK(j1.hits == j5.hits);
  CHECK(j1.samples == 5000);
}

TEST_CASE("density intervals cover the census value") {
  const double truth = 44.0 / 512;
  int covered = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    DensityEstimate d = mc_density(3, Field::make(2, 1), 2000, 0.05, 1000 + seed, 2);
    covered += d.lo <= truth && truth <= d.hi;
  }
  CHECK(covered >= 93);
}

TEST_CASE("intervals") {
  ProportionInterval w = wilson_interval(0, 100, 0.95);
  CHECK(w.lo == 0);
  CHECK(w.hi > 0.03);
  CHECK(w.hi < 0.04);
  ProportionInterval h = wilson_interval(50, 100, 0.95);
  CHECK(h.lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(h.hi == doctest::Approx(0.5962).epsilon(1e-3));
  // Zero failures in n trials: 1 - (1-c)^(1/n).
  CHECK(clopper_pearson_upper(0, 10000, 0.99) == doctest::Approx(1 - std::pow(0.01, 1e-4)).epsilon(1e-6));
  CHECK(clopper_pearson_upper(10, 100, 0.99) > 0.1);
}

TEST_CASE("witness validation run") {
  Field f2 = Field::make(2, 1);
  IsfValidation v = mc_isfcyclic_validation(5, f2, 2000, Rational(1, 20), 9);
  CHECK(v.trials == 2000);
  CHECK(v.uncyclic_true == 0);
  CHECK(v.rate <= 0.05);
  IsfValidation w = mc_isfcyclic_validation(5, f2, 2000, Rational(1, 20), 9);
  CHECK(w.failures == v.failures);
}
