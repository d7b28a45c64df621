#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcyc/numeric.hpp"
#include "fcyc/qpoly.hpp"

namespace fcyc {

/// Weakly decreasing positive parts; the empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  /// Sorts into weakly decreasing order and drops zeros.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  unsigned size() const;
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the end.
  unsigned operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// "5,3,3,1"; the empty partition prints as "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

Partition conjugate(const Partition& p);

/// m_i for i = 1..λ1, ℓ_i = λ'_1 + ... + λ'_i for i = 1..λ1, and e = conjugate
/// of the nonzero multiplicities sorted decreasingly.
struct PartitionVectors {
  std::vector<unsigned> m;
  std::vector<unsigned> ell;
  std::vector<unsigned> e;
};
PartitionVectors partition_vectors(const Partition& p);

/// Sum of squares of the conjugate's parts.
unsigned long conjugate_norm2(const Partition& p);

/// Order of the centralizer of a matrix with a single primary component of
/// shape p over GF(q).
Integer centralizer_order(const Partition& p, const Integer& q);
/// Same as a polynomial in q.
QPoly centralizer_order_poly(const Partition& p);

/// |GL(n,q)|
Integer gl_order(unsigned n, const Integer& q);
QPoly gl_order_poly(unsigned n);

enum class PartitionFilter { all, no_part_one, at_least_two_parts };

/// Reverse lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(unsigned n, PartitionFilter filter = PartitionFilter::all);

/// One primary component of a type: an irreducible of the given degree
/// carrying partition lambda.
struct TypeShape {
  unsigned degree = 1;
  Partition lambda;
};

/// |GL(n,q)| / prod c(lambda, q^degree). Throws std::invalid_argument when the
/// shapes do not fill dimension n.
Integer orbit_size(std::span<const TypeShape> shapes, unsigned n, const Integer& q);

}  // namespace fcyc
