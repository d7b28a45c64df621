#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcyc/field.hpp"
#include "fcyc/partitions.hpp"
#include "fcyc/poly.hpp"

namespace fcyc {

using Vec = std::vector<Elem>;

/// Field operation tally for a single call scope.
struct OpCounter {
  std::uint64_t ops = 0;
};

/// Dense square matrix over GF(q), row-major. Vectors are rows: v -> vX.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t n) : f_(std::move(f)), n_(n), a_(n * n, Elem{0}) {}
  static Mat identity(const Field& f, std::size_t n);
  /// Row-major encodings; throws std::invalid_argument on a size mismatch.
  static Mat from_reps(const Field& f, std::size_t n, std::initializer_list<std::uint32_t> reps);
  static Mat from_reps(const Field& f, std::size_t n, const std::vector<std::uint32_t>& reps);

  const Field& field() const { return f_; }
  std::size_t n() const { return n_; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Elem* row(std::size_t i) const { return a_.data() + i * n_; }
  Elem* row(std::size_t i) { return a_.data() + i * n_; }
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.f_ == b.f_ && a.a_ == b.a_;
  }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Elem> a_;
};

/// Throws std::invalid_argument on a dimension or field mismatch.
Mat mul(const Mat& a, const Mat& b, OpCounter* ops = nullptr);
Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Elem s);
Vec vec_mat(const Vec& v, const Mat& x, OpCounter* ops = nullptr);
bool is_zero(const Vec& v);

/// det(tI - X), via reduction to Hessenberg form.
Poly char_poly(const Mat& x);

/// Krylov data of a vector: its order polynomial and the rows v, vX, ...,
/// vX^(d-1) with d = deg(order).
struct Spin {
  Poly order;
  std::vector<Vec> rows;
};

/// Throws std::invalid_argument on a length mismatch.
Spin spin(const Vec& v, const Mat& x, OpCounter* ops = nullptr);
Poly ord_vector(const Vec& v, const Mat& x);
/// v g(X) from the stored rows; requires deg g < deg of the order.
Vec apply_poly(const Spin& s, const Poly& g, OpCounter* ops = nullptr);

Poly min_poly(const Mat& x);
/// g(X) by Horner's rule.
Mat eval_poly(const Poly& g, const Mat& x);
std::size_t rank(Mat a);
std::size_t nullity(const Mat& a);
/// Throws FieldError when singular.
Mat inverse(const Mat& a);

/// Companion matrix of a monic f in the row convention: rows e_{i+1} and a
/// last row of negated low coefficients, so its order on e_1 is f.
Mat companion(const Poly& f);
Mat block_diag(const std::vector<Mat>& blocks);

Mat random_matrix(std::size_t n, const Field& f, Rng& rng);
Vec random_vector(std::size_t n, const Field& f, Rng& rng);
Vec unit_vector(const Field& f, std::size_t n, std::size_t i);

struct TypeEntry {
  Poly h;
  Partition lambda;

  friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

/// Entries sorted by poly_less on h.
struct MatrixType {
  std::vector<TypeEntry> entries;

  /// e.g. "(t)^[1,1] (t+1)^[2]"
  std::string to_string() const;
  std::vector<TypeShape> shapes() const;
  /// Product of h^|lambda|.
  Poly char_poly(const Field& f) const;
  /// Product of h^lambda_1.
  Poly min_poly(const Field& f) const;
  /// Every primary component has at least two blocks.
  bool is_uncyclic() const;

  friend bool operator==(const MatrixType&, const MatrixType&) = default;
};
bool operator<(const MatrixType& a, const MatrixType& b);

/// `cfac` must be the factorization of char_poly(x).
MatrixType matrix_type(const Mat& x, const Factorization& cfac);
MatrixType matrix_type(const Mat& x, Rng& rng);

/// Irreducibles h with nu(h) = mu(h), in factorization order.
struct FcyclicVerdict {
  std::vector<Poly> cyclic_primes;
  bool is_uncyclic = true;
};
FcyclicVerdict classify_fcyclic(const Mat& x, const Factorization& cfac);
FcyclicVerdict classify_fcyclic(const Mat& x, Rng& rng);

}  // namespace fcyc
