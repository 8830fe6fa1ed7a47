#include <gtest/gtest.h>

#include <cmath>

#include "binomgroup/arith.hpp"
#include "binomgroup/classify.hpp"
#include "binomgroup/error.hpp"
#include "binomgroup/sieve.hpp"
#include "oracles.hpp"

using namespace binomgroup;

namespace {

bool congruent(u64 r) {
  const u64 m8 = r % 8, m7 = r % 7, m17 = r % 17;
  return r % 3 == 2 && (m8 == 3 || m8 == 5) && (m7 == 3 || m7 == 4) && (m17 == 6 || m17 == 11);
}

}  // namespace

TEST(Sieve, PrimesUpTo) {
  std::vector<u64> want;
  for (u64 n = 0; n <= 200000; ++n) {
    if (oracle::is_prime(n)) want.push_back(n);
  }
  EXPECT_EQ(primes_up_to(200000), want);
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_EQ(primes_up_to(2), (std::vector<u64>{2}));
}

TEST(Sieve, Congruences) {
  for (u64 r = 0; r < 100000; ++r) EXPECT_EQ(sieve_congruences(r), congruent(r)) << r;
}

TEST(Sieve, CrtResidues) {
  std::vector<u64> want;
  for (u64 r = 0; r < kSieveModulus; ++r) {
    if (congruent(r)) want.push_back(r);
  }
  EXPECT_EQ(crt_residues(), want);
  EXPECT_EQ(want.size(), 8u);
}

TEST(Sieve, RepunitFreeSquare) {
  const auto table = oracle::repunit_table(1'000'000);
  for (u64 r = 2; r < 1000; ++r) {
    if (!oracle::is_prime(r)) continue;
    EXPECT_EQ(repunit_free_square(r), table[r * r - 1].empty()) << r;
  }
}

TEST(Sieve, TwoImplementationsAgree) {
  for (u64 bound : {u64{100}, u64{10'000}, u64{1'000'000}, u64{123'456'789}, u64{10'000'000'000}}) {
    const SieveReport rep = qualifying_primes(bound);
    EXPECT_EQ(rep.qualifying, qualifying_primes_filter(bound)) << bound;
    EXPECT_EQ(rep.root, isqrt(bound));
  }
}

TEST(Sieve, QualifyingInvariants) {
  const SieveReport rep = qualifying_primes(10'000'000'000ULL);
  EXPECT_EQ(rep.odd_d_witnesses, 0u);
  EXPECT_EQ(rep.congruent, rep.qualifying.size() + rep.d2_excluded + rep.repunit_excluded);
  for (u64 r : rep.qualifying) {
    EXPECT_TRUE(oracle::is_prime(r));
    EXPECT_LE(r * r, rep.bound);
    EXPECT_TRUE(congruent(r));
    EXPECT_TRUE(repunit_representations(r * r - 1).empty()) << r;
    EXPECT_EQ((r * r - 2) % (7 * 17), 0u) << r;
  }
  EXPECT_NEAR(rep.expected, std::sqrt(1e10) / (48 * std::log(1e10)), 1e-9);
  EXPECT_NEAR(rep.ratio, rep.qualifying.size() / rep.expected, 1e-12);
  EXPECT_EQ(rep.flagged, std::abs(rep.ratio - 1) > 0.25);
}

TEST(Sieve, Monotone) {
  std::vector<u64> prev;
  for (u64 bound = 1000; bound <= 1'000'000'000'000ULL; bound *= 7) {
    const auto cur = qualifying_primes(bound).qualifying;
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << bound;
    prev = cur;
  }
}

TEST(Sieve, BoundCeiling) {
  try {
    qualifying_primes(kMaxSieveBound + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundTooLarge);
  }
}

// 11 passes every sieve condition yet G(121) keeps the two cosets of the squares.
TEST(Sieve, ElevenIsASmallCounterexample) {
  const auto small = qualifying_primes(71 * 71).qualifying;
  EXPECT_EQ(small, (std::vector<u64>{11}));
  const Verdict v = decide_group(121);
  EXPECT_EQ(v.kind, VerdictKind::Imprimitive);
  EXPECT_EQ(v.divisors, (std::vector<u64>{2}));
}

TEST(Sieve, RepunitTail) {
  EXPECT_GE(repunit_tail_count(15).count, 1u);
  const auto table = oracle::repunit_table(1'000'000);
  u64 running = 0;
  for (u64 n = 2; n <= 1'000'000; ++n) {
    for (auto [l, d] : table[n]) running += d >= 4;
    if (n % 997 == 0 || n == 1'000'000) {
      const RepunitTail t = repunit_tail_count(n);
      ASSERT_EQ(t.count, running) << n;
      EXPECT_NEAR(t.bound, std::log2(static_cast<double>(n)) * std::cbrt(static_cast<double>(n)), 1e-6 * t.bound);
      EXPECT_EQ(t.within, t.count <= t.bound);
    }
  }
}

TEST(Density, Entries) {
  const DensityReport rep = density_check(31);
  std::vector<u64> ps;
  for (const auto& e : rep.entries) ps.push_back(e.p);
  EXPECT_EQ(ps, (std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}));
  u64 sym = 0, cong = 0;
  for (const auto& e : rep.entries) {
    EXPECT_EQ(e.verdict, decide_group(e.p * e.p).kind) << e.p;
    EXPECT_EQ(e.mod24_congruences, e.p % 3 == 2 && (e.p % 8 == 3 || e.p % 8 == 5));
    sym += e.verdict == VerdictKind::Symmetric;
    cong += e.mod24_congruences;
  }
  EXPECT_EQ(rep.symmetric, sym);
  EXPECT_EQ(rep.mod24_congruent, cong);
  EXPECT_EQ(rep.entries.at(2).verdict, VerdictKind::Imprimitive);  // p = 5 is not counted
  EXPECT_DOUBLE_EQ(rep.fraction, static_cast<double>(sym) / rep.entries.size());
}
