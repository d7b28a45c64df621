#pragma once

#include <vector>

#include "fcyc/numeric.hpp"
#include "fcyc/qpoly.hpp"

namespace fcyc {

/// Sum of 1/c(lambda, q) over partitions lambda of n other than (n).
/// Computed from the nilpotent count: |GL(n,q)| a_n = q^(n^2-n) - (size of
/// the regular nilpotent class).
RatFunc a_n(unsigned n);
/// The same quantity summed term by term over partitions.
RatFunc a_n_partition_sum(unsigned n);

/// q -> q^r, renormalized.
RatFunc ratfunc_subst_qr(const RatFunc& f, unsigned r);

/// Truncated power series in u with rational-function coefficients.
class Series {
 public:
  /// Zero series keeping terms u^0..u^order.
  explicit Series(unsigned order) : c_(order + 1, RatFunc()) {}
  static Series one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const RatFunc& operator[](unsigned k) const { return c_.at(k); }
  RatFunc& operator[](unsigned k) { return c_.at(k); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<RatFunc> c_;
};

/// Mixed orders truncate to the smaller one.
Series operator+(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const RatFunc& s, const Series& a);

/// Generating function for uncyclic matrices, u^0..u^order, with
/// coefficients unc(n,q)/|GL(n,q)|. Symbolic and slow; meant for small orders.
Series unc_series(unsigned order);

/// unc(n, x) at a single integer x, exactly.
Integer unc_at(unsigned n, const Integer& x);

/// unc(n,q) as an integer polynomial in q. Evaluates at integer points in
/// a scaled integral basis (jobs threads), then interpolates; aborts with
/// std::logic_error if any step fails to be exact.
QPoly unc_poly(unsigned n, unsigned jobs = 1);
/// unc(k,q) for k = 0..max_n from one shared set of evaluations.
std::vector<QPoly> unc_polys(unsigned max_n, unsigned jobs = 1);

}  // namespace fcyc
