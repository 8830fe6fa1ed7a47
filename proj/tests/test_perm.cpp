#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "binomgroup/bsgs.hpp"
#include "binomgroup/error.hpp"
#include "binomgroup/perm.hpp"
#include "oracles.hpp"

using namespace binomgroup;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Perm::Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

Perm transposition(std::size_t n, Perm::Point a, Perm::Point b) {
  std::vector<Perm::Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[a], img[b]);
  return Perm(std::move(img));
}

}  // namespace

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm({0, 0, 1}), Error);
  EXPECT_THROW(Perm({0, 3, 1}), Error);
}

TEST(Perm, ComposeConvention) {
  const Perm a({1, 2, 0}), b({1, 0, 2});
  const Perm ab = compose(a, b);
  for (Perm::Point i = 0; i < 3; ++i) EXPECT_EQ(ab(i), a(b(i)));
  EXPECT_THROW(compose(a, Perm::identity(4)), Error);
}

TEST(Perm, InverseAndPower) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Perm p = random_perm(1 + rng() % 40, rng);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    Perm acc = Perm::identity(p.degree());
    for (unsigned k = 0; k < 7; ++k) {
      EXPECT_EQ(power(p, k), acc);
      acc = compose(p, acc);
    }
  }
}

TEST(Perm, ShiftCycleType) {
  const Perm s = Perm::shift(6);
  EXPECT_EQ(cycle_type(s), (std::vector<std::size_t>{6}));
  EXPECT_TRUE(is_full_cycle(s));
  EXPECT_EQ(parity(s), Parity::Odd);
  EXPECT_EQ(cycle_type(Perm::shift(6, 2)), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(fixed_points(Perm::identity(5)), 5u);
}

TEST(Perm, ParityMatchesInversionCount) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const Perm p = random_perm(1 + rng() % 30, rng);
    EXPECT_EQ(parity(p) == Parity::Odd, oracle::odd_by_inversions(p));
  }
}

TEST(Perm, ParityIsHomomorphism) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng() % 25;
    const Perm a = random_perm(n, rng), b = random_perm(n, rng);
    const bool odd = (parity(a) == Parity::Odd) != (parity(b) == Parity::Odd);
    EXPECT_EQ(parity(compose(a, b)) == Parity::Odd, odd);
  }
}

TEST(Perm, CycleTypeSumsToDegree) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const Perm p = random_perm(1 + rng() % 50, rng);
    const auto ct = cycle_type(p);
    EXPECT_EQ(std::accumulate(ct.begin(), ct.end(), std::size_t{0}), p.degree());
    EXPECT_TRUE(std::is_sorted(ct.rbegin(), ct.rend()));
    EXPECT_EQ(static_cast<std::size_t>(std::count(ct.begin(), ct.end(), 1)), fixed_points(p));
  }
}

TEST(Bsgs, SymmetricGroupSelfTest) {
  const Perm gens[] = {transposition(8, 0, 1), Perm::shift(8)};
  EXPECT_EQ(bsgs_order(gens), BigInt(40320));
}

TEST(Bsgs, CyclicAndTrivial) {
  const Perm shift[] = {Perm::shift(6)};
  EXPECT_EQ(bsgs_order(shift), BigInt(6));
  EXPECT_EQ(bsgs_order(std::span<const Perm>{}), BigInt(1));
  const Perm id[] = {Perm::identity(9)};
  EXPECT_EQ(bsgs_order(id), BigInt(1));
}

TEST(Bsgs, LargeSymmetricAndAlternating) {
  const std::size_t n = 60;
  const Perm sym[] = {transposition(n, 0, 1), Perm::shift(n)};
  EXPECT_EQ(bsgs_order(sym), factorial(n));
  // 3-cycle (0 1 2) and the (n-1)-cycle on 1..n-1 (n odd => even) generate A_n for n = 61.
  const std::size_t m = 61;
  std::vector<Perm::Point> c3(m), big(m);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1, c3[1] = 2, c3[2] = 0;
  std::iota(big.begin(), big.end(), 0);
  for (std::size_t i = 0; i < m; ++i) big[i] = static_cast<Perm::Point>((i + 1) % m);
  const Perm alt[] = {Perm(c3), Perm(big)};
  EXPECT_EQ(bsgs_order(alt), factorial(m) / 2);
}

TEST(Bsgs, MatchesClosureOnRandomGroups) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<Perm> gens;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) {
      // Powers of random perms give small groups as well as large ones.
      gens.push_back(power(random_perm(n, rng), 1 + rng() % 3));
    }
    const auto want = oracle::closure_order(gens, 10'000'000);
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(bsgs_order(gens), BigInt(*want)) << "n=" << n;
  }
}

TEST(Bsgs, MembershipAndIncrementalGrowth) {
  std::mt19937_64 rng(6);
  StabilizerChain chain(7);
  EXPECT_TRUE(chain.add_generator(Perm::shift(7)));
  EXPECT_FALSE(chain.add_generator(Perm::shift(7, 3)));
  EXPECT_EQ(chain.order(), BigInt(7));
  EXPECT_TRUE(chain.add_generator(Perm({0, 2, 4, 6, 1, 3, 5})));  // x -> 2x, AGL(1,7) piece
  EXPECT_EQ(chain.order(), BigInt(21));
  EXPECT_TRUE(chain.contains(Perm({0, 4, 1, 5, 2, 6, 3})));  // x -> 4x
  EXPECT_FALSE(chain.contains(transposition(7, 0, 1)));
  for (int i = 0; i < 100; ++i) {
    const Perm p = random_perm(7, rng);
    const auto cl = oracle::closure_order({Perm::shift(7), Perm({0, 2, 4, 6, 1, 3, 5}), p}, 10000);
    StabilizerChain c(7);
    c.add_generators(std::vector<Perm>{Perm::shift(7), Perm({0, 2, 4, 6, 1, 3, 5}), p});
    EXPECT_EQ(c.order(), BigInt(*cl));
  }
}

TEST(Bsgs, OrderLimitTruncates) {
  StabilizerChain chain(40);
  chain.set_order_limit(BigInt(1000));
  chain.add_generator(transposition(40, 0, 1));
  chain.add_generator(Perm::shift(40));
  EXPECT_TRUE(chain.truncated());
  EXPECT_GT(chain.order(), BigInt(1000));
}

TEST(Bsgs, DegreeCeiling) {
  try {
    const Perm big[] = {Perm::shift(100)};
    bsgs_order(big, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooLarge);
  }
}
