#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcyc {

/// Raw field element: base-p digits of the residue polynomial, low digit is
/// the constant term. Only meaningful together with a Field.
struct Elem {
  std::uint32_t rep = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 16;

/// GF(p^k) with an explicit monic irreducible modulus.
///
/// Multiplication goes through log/antilog tables; addition is XOR in
/// characteristic 2, modular for prime fields, and a lookup table or
/// digitwise sum otherwise. Copies share the immutable tables.
class Field {
 public:
  /// GF(2), mostly so containers can default-construct.
  Field();

  /// Throws FieldError on a non-prime p, k < 1, a reducible or malformed
  /// modulus, or q above `max_order`. With k > 1 and no modulus, picks the
  /// monic irreducible of degree k whose lower coefficients have the least
  /// base-p encoding.
  static Field make(std::uint32_t p, unsigned k,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                    std::uint32_t max_order = kDefaultMaxFieldOrder);

  /// Accepts "p^k", "p^k/c0,c1,...,1", a bare prime power "q" and "q/c0,...".
  static Field parse(std::string_view spec, std::uint32_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t p() const { return t_->p; }
  unsigned k() const { return t_->k; }
  std::uint32_t q() const { return t_->q; }
  /// Ascending coefficients including the leading 1; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  /// "p^k", plus "/c0,...,1" for extension fields.
  std::string to_string() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  bool contains(Elem a) const { return a.rep < t_->q; }

  Elem add(Elem a, Elem b) const {
    if (t_->p == 2) return Elem{a.rep ^ b.rep};
    if (t_->k == 1) {
      std::uint32_t s = a.rep + b.rep;
      return Elem{s >= t_->p ? s - t_->p : s};
    }
    if (!t_->add_table.empty()) return Elem{t_->add_table[a.rep * t_->q + b.rep]};
    return Elem{digit_add(a.rep, b.rep)};
  }
  Elem neg(Elem a) const {
    if (t_->p == 2) return a;
    return Elem{t_->neg_table[a.rep]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.rep == 0 || b.rep == 0) return Elem{0};
    std::uint32_t s = t_->log[a.rep] + t_->log[b.rep];
    return Elem{t_->exp[s]};
  }
  /// Throws FieldError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;

  /// All q elements in encoding order.
  std::vector<Elem> elements() const;

  /// Deterministic uniform draw.
  template <class Rng>
  Elem random(Rng& rng) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ ||
           (a.t_->p == b.t_->p && a.t_->k == b.t_->k && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    std::uint32_t p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::uint32_t> exp;   // length 2(q-1)
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint16_t> add_table;  // q*q, only for small odd extension fields
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;

  std::shared_ptr<const Tables> t_;
};

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection, so that
/// streams are identical across standard library implementations.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  static_assert(Rng::min() == 0 && Rng::max() == ~std::uint64_t{0});
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

template <class Rng>
Elem Field::random(Rng& rng) const {
  return Elem{static_cast<std::uint32_t>(uniform_below(rng, t_->q))};
}

/// Field element bound to its field; arithmetic between different fields
/// throws FieldError.
class FieldElem {
 public:
  FieldElem(Field f, Elem e);
  FieldElem(Field f, std::uint32_t rep) : FieldElem(std::move(f), Elem{rep}) {}

  const Field& field() const { return f_; }
  Elem elem() const { return e_; }
  std::uint32_t rep() const { return e_.rep; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {f_, f_.neg(e_)}; }
  FieldElem inv() const { return {f_, f_.inv(e_)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.f_ == b.f_ && a.e_ == b.e_;
  }

 private:
  void check_same(const FieldElem& o) const;

  Field f_;
  Elem e_;
};

using Rng = std::mt19937_64;

/// Independent stream for worker `index` of a run seeded with `seed`.
Rng derive_rng(std::uint64_t seed, std::uint64_t index);

bool is_prime(std::uint64_t n);

}  // namespace fcyc
