#include "fcyc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

namespace fcyc {

ProportionInterval wilson_interval(std::uint64_t hits, std::uint64_t n, double confidence) {
  if (n == 0 || hits > n) throw std::invalid_argument("need 0 <= hits <= n and n >= 1");
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2);
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z / (1 + z2 / nn) * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return {std::clamp(centre - half, 0.0, p), std::clamp(centre + half, p, 1.0)};
}

double clopper_pearson_upper(std::uint64_t hits, std::uint64_t n, double confidence) {
  if (n == 0 || hits > n) throw std::invalid_argument("need 0 <= hits <= n and n >= 1");
  using boost::math::binomial_distribution;
  return binomial_distribution<>::find_upper_bound_on_p(static_cast<double>(n),
                                                        static_cast<double>(hits), 1 - confidence);
}

}  // namespace fcyc
