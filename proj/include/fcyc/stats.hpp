#pragma once

#include <cstdint>

namespace fcyc {

struct ProportionInterval {
  double lo = 0;
  double hi = 1;
};

/// Wilson score interval at two-sided level `confidence`.
ProportionInterval wilson_interval(std::uint64_t hits, std::uint64_t n, double confidence);

/// One-sided Clopper-Pearson upper bound on the success probability at
/// level `confidence`.
double clopper_pearson_upper(std::uint64_t hits, std::uint64_t n, double confidence);

}  // namespace fcyc
