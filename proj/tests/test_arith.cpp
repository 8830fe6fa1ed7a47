#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "binomgroup/arith.hpp"
#include "oracles.hpp"

using namespace binomgroup;

TEST(Arith, PrimalityMatchesTrialDivision) {
  for (u64 n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() % 10'000'000'000ULL;
    if (n % 2 == 0 && n > 2) continue;
    // trial division to 10^5 is enough at this size
    EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
}

TEST(Arith, PrimePowerMatchesOracle) {
  for (u64 n = 0; n < 50000; ++n) {
    const auto want = oracle::prime_power(n);
    const auto got = prime_power(n);
    ASSERT_EQ(got.has_value(), want.has_value()) << n;
    if (got) {
      EXPECT_EQ(got->p, want->first);
      EXPECT_EQ(got->e, want->second);
    }
  }
  EXPECT_EQ(prime_power(u64{1} << 63), (PrimePower{2, 63}));
  EXPECT_FALSE(prime_power(119).has_value());
}

TEST(Arith, Roots) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const u64 n = rng();
    for (unsigned k = 1; k <= 5; ++k) {
      const u64 r = iroot(n, k);
      const auto lo = checked_pow(r, k);
      ASSERT_TRUE(lo && *lo <= n);
      const auto hi = checked_pow(r + 1, k);
      EXPECT_TRUE(!hi || *hi > n);
    }
  }
  EXPECT_EQ(isqrt(99), 9u);
  EXPECT_EQ(isqrt(100), 10u);
}

TEST(Arith, DivisorsAndPhi) {
  for (u64 n = 1; n < 3000; ++n) {
    std::vector<u64> want;
    u64 phi = 0;
    for (u64 d = 1; d <= n; ++d) {
      if (n % d == 0) want.push_back(d);
      if (std::gcd(d, n) == 1) ++phi;
    }
    EXPECT_EQ(divisors(n), want);
    EXPECT_EQ(euler_phi(n), phi);
  }
}

TEST(Arith, ModularInverse) {
  for (u64 m = 2; m < 200; ++m) {
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      EXPECT_EQ(mul_mod(a, inverse_mod(a, m), m), 1u % m);
    }
  }
}

TEST(Arith, PrimePowersInRange) {
  EXPECT_EQ(prime_powers_in(3, 9), (std::vector<u64>{3, 4, 5, 7, 8, 9}));
  const auto all = prime_powers_in(1, 5000);
  std::vector<u64> want;
  for (u64 n = 1; n <= 5000; ++n) {
    if (oracle::prime_power(n)) want.push_back(n);
  }
  EXPECT_EQ(all, want);
}
