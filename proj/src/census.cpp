#include "fcyc/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "fcyc/stats.hpp"
#include "fcyc/witness.hpp"

namespace fcyc {

std::uint64_t default_census_budget() {
  if (const char* env = std::getenv("FCYC_CENSUS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return std::uint64_t{1} << 27;
}

namespace {

// Factorizations of characteristic polynomials seen by one worker.
class FactorCache {
 public:
  explicit FactorCache(Rng rng) : rng_(std::move(rng)) {}

  const Factorization& get(const Poly& c) {
    auto it = cache_.find(c.coeffs());
    if (it == cache_.end()) it = cache_.emplace(c.coeffs(), factor(c, rng_)).first;
    return it->second;
  }

 private:
  Rng rng_;
  std::map<std::vector<Elem>, Factorization> cache_;
};

bool uncyclic_fast(const Mat& x, const Factorization& fac) {
  for (const auto& [h, e] : fac.factors)
    if (nullity(eval_poly(h, x)) == static_cast<std::size_t>(h.degree())) return false;
  return true;
}

struct Partial {
  std::uint64_t uncyclic = 0;
  std::map<MatrixType, std::uint64_t> per_type;
};

}  // namespace

CensusResult census(unsigned n, const Field& f, const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t cells = std::size_t{n} * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (total > opts.budget / f.q())
      throw BudgetError("census of M(" + std::to_string(n) + "," + std::to_string(f.q()) +
                        ") exceeds budget " + std::to_string(opts.budget));
    total *= f.q();
  }
  if (total > opts.budget)
    throw BudgetError("census exceeds budget " + std::to_string(opts.budget));

  const unsigned jobs = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(opts.jobs, total)));
  std::vector<Partial> parts(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = total * w / jobs, end = total * (w + 1) / jobs;
    FactorCache cache(derive_rng(0, w));
    // Odometer digits, last entry least significant.
    std::vector<std::uint32_t> digit(cells, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = cells; i-- > 0;) {
      digit[i] = static_cast<std::uint32_t>(idx % f.q());
      idx /= f.q();
    }
    Mat x(f, n);
    for (std::size_t i = 0; i < cells; ++i) x(i / n, i % n) = Elem{digit[i]};
    Partial& out = parts[w];
    for (std::uint64_t k = begin; k < end; ++k) {
      const Factorization& fac = cache.get(char_poly(x));
      if (opts.with_types) {
        MatrixType t = matrix_type(x, fac);
        if (t.is_uncyclic()) ++out.uncyclic;
        ++out.per_type[t];
      } else if (uncyclic_fast(x, fac)) {
        ++out.uncyclic;
      }
      for (std::size_t i = cells; i-- > 0;) {
        if (++digit[i] < f.q()) {
          x(i / n, i % n) = Elem{digit[i]};
          break;
        }
        digit[i] = 0;
        x(i / n, i % n) = Elem{0};
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  CensusResult r;
  r.n = n;
  r.q = f.q();
  r.total = total;
  for (auto& p : parts) {
    r.uncyclic_count += p.uncyclic;
    for (auto& [t, c] : p.per_type) r.per_type[t] += c;
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

DensityEstimate mc_density(unsigned n, const Field& f, std::uint64_t samples, double alpha,
                           std::uint64_t seed, unsigned jobs) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const std::uint64_t blocks = (samples + kDensityBlock - 1) / kDensityBlock;
  jobs = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(jobs, blocks)));
  std::vector<std::uint64_t> hits(jobs, 0);
  auto work = [&](unsigned w) {
    FactorCache cache(derive_rng(seed, ~std::uint64_t{0} - w));
    for (std::uint64_t b = w; b < blocks; b += jobs) {
      Rng rng = derive_rng(seed, b);
      const std::uint64_t count = std::min(kDensityBlock, samples - b * kDensityBlock);
      for (std::uint64_t s = 0; s < count; ++s) {
        Mat x = random_matrix(n, f, rng);
        if (uncyclic_fast(x, cache.get(char_poly(x)))) ++hits[w];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  DensityEstimate d;
  d.samples = samples;
  for (auto h : hits) d.hits += h;
  d.estimate = static_cast<double>(d.hits) / static_cast<double>(samples);
  d.confidence = 1 - alpha;
  auto ci = wilson_interval(d.hits, samples, d.confidence);
  d.lo = ci.lo;
  d.hi = ci.hi;
  d.seed = seed;
  return d;
}

IsfValidation mc_isfcyclic_validation(unsigned n, const Field& f, std::uint64_t trials,
                                      const Rational& eps, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  Rng mat_rng = derive_rng(seed, 0);
  Rng vec_rng = derive_rng(seed, 1);
  FactorCache cache(derive_rng(seed, 2));
  IsfValidation v;
  v.seed = seed;
  const std::uint64_t max_draws = 100 * trials + 1000;
  for (std::uint64_t draw = 0; v.trials < trials && draw < max_draws; ++draw) {
    Mat x = random_matrix(n, f, mat_rng);
    const Poly c = char_poly(x);
    const bool unc = uncyclic_fast(x, cache.get(c));
    IsfResult r = is_f_cyclic(x, c, eps, vec_rng);
    if (unc) {
      ++v.uncyclic_tested;
      if (r.verdict) ++v.uncyclic_true;
    } else {
      ++v.trials;
      if (!r.verdict) ++v.failures;
    }
  }
  if (v.trials == 0) return v;
  v.rate = static_cast<double>(v.failures) / static_cast<double>(v.trials);
  v.upper99 = clopper_pearson_upper(v.failures, v.trials, 0.99);
  v.passes = v.trials >= trials && v.uncyclic_true == 0 && v.upper99 <= eps.get_d();
  return v;
}

}  // namespace fcyc
