#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace binomgroup {

using u64 = std::uint64_t;

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
// Inverse of a modulo m; requires gcd(a, m) == 1 and m >= 1.
u64 inverse_mod(u64 a, u64 m);

// Deterministic Miller-Rabin; the first twelve prime bases are exact below 3.3e24.
bool is_prime(u64 n);

// Largest r with r^k <= n.
u64 iroot(u64 n, unsigned k);
u64 isqrt(u64 n);

// Returns (p, e) with n = p^e, or nullopt when n is not a prime power (n < 2 included).
std::optional<PrimePower> prime_power(u64 n);
inline bool is_prime_power(u64 n) { return prime_power(n).has_value(); }

std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> prime_factors(u64 n);
std::vector<u64> divisors(u64 n);
u64 euler_phi(u64 n);

// Checked integer power; nullopt on overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

// All prime powers q with lo <= q <= hi, ascending.
std::vector<u64> prime_powers_in(u64 lo, u64 hi);

}  // namespace binomgroup
