#include "binomgroup/ffield.hpp"

#include <numeric>
#include <string>

#include "binomgroup/error.hpp"

namespace binomgroup {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial.
Poly poly_rem(Poly a, std::span<const std::uint32_t> monic, u64 p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        u64 sub = lead * monic[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, std::span<const std::uint32_t> monic, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + u64{a[i]} * b[j]) % p);
    }
  }
  return poly_rem(std::move(prod), monic, p);
}

Poly poly_powmod(Poly base, u64 exp, std::span<const std::uint32_t> monic, u64 p) {
  Poly result{1};
  while (exp != 0) {
    if (exp & 1) result = poly_mulmod(result, base, monic, p);
    base = poly_mulmod(base, base, monic, p);
    exp >>= 1;
  }
  return result;
}

Poly decode(u64 enc, u64 p, unsigned e) {
  Poly out(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = static_cast<std::uint32_t>(enc % p);
    enc /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode(const Poly& a, u64 p) {
  u64 enc = 0;
  for (std::size_t i = a.size(); i-- > 0;) enc = enc * p + a[i];
  return static_cast<std::uint32_t>(enc);
}

Poly find_modulus(u64 p, unsigned e) {
  if (e == 1) return Poly{0, 1};
  const u64 count = *checked_pow(p, e);
  for (u64 idx = 0; idx < count; ++idx) {
    Poly cand(e + 1, 0);
    cand[e] = 1;
    u64 rest = idx;
    // c_0 is the most significant position of the lexicographic order.
    for (unsigned i = e; i-- > 0;) {
      cand[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (cand[0] == 0) continue;
    if (is_irreducible_mod_p(cand, p)) return cand;
  }
  throw Error(ErrorKind::NoIrreducibleFound,
              "no monic irreducible of degree " + std::to_string(e) + " over F_" + std::to_string(p));
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, u64 p) {
  const unsigned e = static_cast<unsigned>(monic.size() - 1);
  for (unsigned deg = 1; deg <= e / 2; ++deg) {
    const u64 tails = *checked_pow(p, deg);
    for (u64 t = 0; t < tails; ++t) {
      Poly div(deg + 1, 0);
      div[deg] = 1;
      u64 rest = t;
      for (unsigned i = 0; i < deg; ++i) {
        div[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(Poly(monic.begin(), monic.end()), div, p).empty()) return false;
    }
  }
  return true;
}

FieldCtx build_field(u64 p, unsigned e, u64 ceiling) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::BadFieldShape, "extension degree must be positive");
  auto q_opt = checked_pow(p, e);
  if (!q_opt || *q_opt > ceiling || *q_opt >= Elem::kZeroTag) {
    throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(e) +
                                         " exceeds the field ceiling " + std::to_string(ceiling));
  }
  const u64 q = *q_opt;

  FieldCtx ctx;
  ctx.spec_.p = p;
  ctx.spec_.e = e;
  ctx.spec_.q = q;
  ctx.spec_.modulus = find_modulus(p, e);
  ctx.order_ = static_cast<std::uint32_t>(q - 1);
  const auto& modulus = ctx.spec_.modulus;

  const auto order_primes = prime_factors(q - 1);
  std::uint32_t generator = 0;
  if (q == 2) {
    generator = 1;
  } else {
    for (u64 enc = 2; enc < q && generator == 0; ++enc) {
      Poly x = decode(enc, p, e);
      bool full = true;
      for (u64 l : order_primes) {
        if (poly_powmod(x, (q - 1) / l, modulus, p) == Poly{1}) {
          full = false;
          break;
        }
      }
      if (full) generator = static_cast<std::uint32_t>(enc);
    }
  }
  if (generator == 0) throw Error(ErrorKind::Internal, "no generator of full order found");
  ctx.spec_.generator = generator;

  const std::uint32_t n = ctx.order_;
  ctx.exp_.resize(n);
  ctx.log_.assign(q, FieldCtx::kZechNone);
  if (e == 1) {
    u64 x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      ctx.exp_[i] = static_cast<std::uint32_t>(x);
      x = x * generator % p;
    }
  } else {
    const Poly g = decode(generator, p, e);
    Poly x{1};
    for (std::uint32_t i = 0; i < n; ++i) {
      ctx.exp_[i] = encode(x, p);
      x = poly_mulmod(x, g, modulus, p);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (ctx.log_[ctx.exp_[i]] != FieldCtx::kZechNone) {
      throw Error(ErrorKind::Internal, "generator powers repeat; generator order is not q - 1");
    }
    ctx.log_[ctx.exp_[i]] = i;
  }

  ctx.zech_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t enc = ctx.exp_[i];
    const std::uint32_t c0 = static_cast<std::uint32_t>(enc % p);
    const std::uint32_t plus_one = c0 + 1 == p ? enc - c0 : enc + 1;
    ctx.zech_[i] = plus_one == 0 ? FieldCtx::kZechNone : ctx.log_[plus_one];
  }
  ctx.neg_shift_ = p == 2 ? 0 : n / 2;
  return ctx;
}

FieldCtx build_field_for(u64 q, u64 ceiling) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  return build_field(pp->p, pp->e, ceiling);
}

Elem FieldCtx::from_encoding(std::uint32_t enc) const {
  if (enc >= spec_.q) throw Error(ErrorKind::Internal, "encoding out of range");
  return enc == 0 ? Elem::zero() : Elem::from_log(log_[enc]);
}

Elem FieldCtx::inv(Elem x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Elem::from_log(x.log() == 0 ? 0 : order_ - x.log());
}

Elem FieldCtx::pow(Elem x, std::int64_t k) const {
  if (x.is_zero()) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? one() : Elem::zero();
  }
  const auto n = static_cast<std::int64_t>(order_);
  const std::int64_t kk = ((k % n) + n) % n;
  return Elem::from_log(static_cast<std::uint32_t>(mul_mod(x.log(), static_cast<u64>(kk), order_)));
}

u64 FieldCtx::mult_order(Elem x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "order of zero");
  const u64 n = order_;
  return n / std::gcd(n, u64{x.log()});
}

}  // namespace binomgroup
