#pragma once

#include <cstdint>
#include <map>

#include "fcyc/field.hpp"
#include "fcyc/matrix.hpp"
#include "fcyc/numeric.hpp"

namespace fcyc {

/// 2^27, or FCYC_CENSUS_BUDGET when set.
std::uint64_t default_census_budget();

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  bool with_types = false;
  unsigned jobs = 1;
  std::uint64_t budget = default_census_budget();
};

struct CensusResult {
  unsigned n = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::uint64_t uncyclic_count = 0;
  /// Filled only with with_types.
  std::map<MatrixType, std::uint64_t> per_type;
  double wall_time = 0;
};

/// Classifies every matrix in M(n,F), enumerated as an odometer over entry
/// encodings in row-major order. Throws BudgetError when q^(n^2) exceeds the
/// budget.
CensusResult census(unsigned n, const Field& f, const CensusOptions& opts = {});

inline constexpr std::uint64_t kDensityBlock = 1024;

struct DensityEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double lo = 0;
  double hi = 0;
  double confidence = 0.95;
  std::uint64_t seed = 0;
};

/// Fraction of uncyclic matrices among `samples` uniform draws, with a
/// Wilson interval at level 1 - alpha. Samples come in blocks of
/// kDensityBlock, block b drawing from derive_rng(seed, b), so the result
/// does not depend on the number of jobs.
DensityEstimate mc_density(unsigned n, const Field& f, std::uint64_t samples, double alpha,
                           std::uint64_t seed, unsigned jobs = 1);

struct IsfValidation {
  /// f-cyclic matrices tested and how many got a False verdict.
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double rate = 0;
  /// 99% one-sided Clopper-Pearson upper bound on the failure rate.
  double upper99 = 0;
  bool passes = false;
  /// Uncyclic matrices met along the way, and how many got True (must be 0).
  std::uint64_t uncyclic_tested = 0;
  std::uint64_t uncyclic_true = 0;
  std::uint64_t seed = 0;
};

/// Draws random matrices until `trials` f-cyclic ones (by the exact
/// classifier) have been run through is_f_cyclic.
IsfValidation mc_isfcyclic_validation(unsigned n, const Field& f, std::uint64_t trials,
                                      const Rational& eps, std::uint64_t seed);

}  // namespace fcyc
