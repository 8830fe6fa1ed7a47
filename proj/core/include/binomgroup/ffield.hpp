#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "binomgroup/arith.hpp"

namespace binomgroup {

/// Element of F_q in discrete-log coordinates: either zero or g^log for the
/// field's chosen generator g. Two Elems are equal iff their encodings are.
class Elem {
 public:
  static constexpr std::uint32_t kZeroTag = std::numeric_limits<std::uint32_t>::max();

  constexpr Elem() = default;
  static constexpr Elem zero() { return Elem{}; }
  static constexpr Elem from_log(std::uint32_t log) { return Elem(log); }

  constexpr bool is_zero() const { return raw_ == kZeroTag; }
  // Only meaningful for nonzero elements.
  constexpr std::uint32_t log() const { return raw_; }
  constexpr std::uint32_t raw() const { return raw_; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  constexpr explicit Elem(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_ = kZeroTag;
};

struct FieldSpec {
  u64 p = 0;
  unsigned e = 0;
  u64 q = 0;
  // Monic modulus, coefficients low degree first (length e + 1). For e == 1 this is x.
  std::vector<std::uint32_t> modulus;
  // Generator in the integer encoding sum c_i p^i of its coefficient vector.
  std::uint32_t generator = 0;
};

/// Fully tabulated finite field. Immutable once built; share freely across threads.
class FieldCtx {
 public:
  static constexpr u64 kDefaultCeiling = u64{1} << 20;
  static constexpr std::uint32_t kZechNone = Elem::kZeroTag;

  const FieldSpec& spec() const { return spec_; }
  u64 p() const { return spec_.p; }
  u64 q() const { return spec_.q; }
  // Order of the multiplicative group, q - 1.
  std::uint32_t order() const { return order_; }

  Elem one() const { return Elem::from_log(0); }
  Elem gen() const { return Elem::from_log(order_ == 1 ? 0 : 1); }
  Elem minus_one() const { return Elem::from_log(neg_shift_); }
  Elem from_log(u64 i) const { return Elem::from_log(static_cast<std::uint32_t>(i % order_)); }
  Elem from_encoding(std::uint32_t enc) const;
  std::uint32_t encoding(Elem x) const { return x.is_zero() ? 0 : exp_[x.log()]; }
  // Element of the prime field with the given integer value.
  Elem from_int(u64 v) const { return from_encoding(static_cast<std::uint32_t>(v % spec_.p)); }

  Elem add(Elem x, Elem y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    std::uint32_t diff = y.log() >= x.log() ? y.log() - x.log() : y.log() + order_ - x.log();
    std::uint32_t z = zech_[diff];
    if (z == kZechNone) return Elem::zero();
    return Elem::from_log(add_index(x.log(), z));
  }
  Elem neg(Elem x) const {
    return x.is_zero() ? x : Elem::from_log(add_index(x.log(), neg_shift_));
  }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const {
    if (x.is_zero() || y.is_zero()) return Elem::zero();
    return Elem::from_log(add_index(x.log(), y.log()));
  }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  // Exponents reduce mod q - 1 for nonzero base; negative k needs x != 0. pow(0, 0) = 1.
  Elem pow(Elem x, std::int64_t k) const;

  // Multiplicative order of a nonzero element.
  u64 mult_order(Elem x) const;

  std::span<const std::uint32_t> exp_table() const { return exp_; }
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> zech_table() const { return zech_; }

 private:
  friend FieldCtx build_field(u64 p, unsigned e, u64 ceiling);

  std::uint32_t add_index(std::uint32_t i, std::uint32_t j) const {
    std::uint32_t s = i + j;
    return s >= order_ ? s - order_ : s;
  }

  FieldSpec spec_;
  std::uint32_t order_ = 1;
  std::uint32_t neg_shift_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
};

/// Builds F_{p^e} deterministically: the modulus is the first monic irreducible
/// when candidates are ordered lexicographically on (c_0, c_1, ..., c_{e-1}), and
/// the generator is the smallest element of full order by integer encoding.
FieldCtx build_field(u64 p, unsigned e, u64 ceiling = FieldCtx::kDefaultCeiling);

// Convenience overload: q must be a prime power (NotPrimePower otherwise).
FieldCtx build_field_for(u64 q, u64 ceiling = FieldCtx::kDefaultCeiling);

// True iff the monic polynomial (coefficients low first) is irreducible over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, u64 p);

}  // namespace binomgroup
