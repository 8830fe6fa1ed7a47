#include "binomgroup/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "binomgroup/error.hpp"

namespace binomgroup {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ExponentRange: return "ExponentRange";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::BadFieldShape: return "BadFieldShape";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::BadGcd: return "BadGcd";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::MissingScalar: return "MissingScalar";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotBlockRespecting: return "NotBlockRespecting";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorKind::Internal, "inverse_mod: arguments not coprime");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 b : kBases) {
    u64 x = pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw Error(ErrorKind::Internal, "iroot: k == 0");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;
  // Start from the floating estimate and correct in both directions.
  auto r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto fits = [&](u64 c) {
    auto v = checked_pow(c, k);
    return v && *v <= n;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

u64 isqrt(u64 n) { return iroot(n, 2); }

std::optional<PrimePower> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  const unsigned max_k = static_cast<unsigned>(std::bit_width(n)) - 1;
  for (unsigned k = std::max(max_k, 1u); k >= 1; --k) {
    u64 r = iroot(n, k);
    if (r < 2) continue;
    auto v = checked_pow(r, k);
    if (v && *v == n && is_prime(r)) return PrimePower{r, k};
    if (k == 1) break;
  }
  return std::nullopt;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 out = n;
  for (auto [p, e] : factorize(n)) out = out / p * (p - 1);
  return out;
}

std::vector<u64> prime_powers_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

}  // namespace binomgroup
