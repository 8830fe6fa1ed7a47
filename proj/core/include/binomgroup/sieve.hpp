#pragma once

#include <vector>

#include "binomgroup/arith.hpp"
#include "binomgroup/classify.hpp"

namespace binomgroup {

inline constexpr u64 kSieveModulus = 3 * 8 * 7 * 17;  // 2856
inline constexpr u64 kMaxSieveBound = 100'000'000'000'000ULL;  // 10^14

// Primes <= limit, ascending (segmented sieve of Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

// r = 2 (mod 3), r = +-3 (mod 8), r = +-3 (mod 7), r = +-6 (mod 17).
bool sieve_congruences(u64 r);

// The residues mod 2856 solving the congruence system, assembled by CRT. Ascending.
std::vector<u64> crt_residues();

// q - 1 = r^2 - 1 admits no repunit representation. d = 2 is decided by testing
// whether r^2 - 2 is a prime power, d >= 3 by exhaustive search.
bool repunit_free_square(u64 r);

struct SieveReport {
  u64 bound = 0;
  u64 root = 0;  // floor(sqrt(bound))
  std::vector<u64> qualifying;
  u64 congruent = 0;       // primes <= root meeting all four congruences
  u64 d2_excluded = 0;     // r^2 - 2 a prime power
  u64 repunit_excluded = 0;  // excluded through some d >= 3
  u64 odd_d_witnesses = 0; // d odd >= 3 representations met; expected 0
  double expected = 0;     // sqrt(N) / (48 ln N)
  double ratio = 0;        // qualifying / expected
  bool flagged = false;    // |ratio - 1| > 0.25
};

// Walks the CRT classes. Throws BoundTooLarge above 10^14.
SieveReport qualifying_primes(u64 bound);
// Independent implementation: filter every prime <= sqrt(N) by the congruences.
std::vector<u64> qualifying_primes_filter(u64 bound);

struct RepunitTail {
  u64 count = 0;
  double bound = 0;  // log2(N) N^(1/3)
  bool within = true;
};

// Pairs (l, d), l a prime power, d >= 4, 1 + l + ... + l^(d-1) <= N.
RepunitTail repunit_tail_count(u64 bound);

struct DensityEntry {
  u64 p = 0;
  VerdictKind verdict = VerdictKind::Trivial;
  bool mod24_congruences = false;   // p = 2 (mod 3) and p = +-3 (mod 8)
  bool sieve_qualifying = false;  // all four congruences and repunit-free p^2 - 1
};

struct DensityReport {
  std::vector<DensityEntry> entries;
  u64 symmetric = 0;
  u64 mod24_congruent = 0;
  double fraction = 0;  // symmetric / entries
};

// decide_group(p^2) for every prime p <= p_max.
DensityReport density_check(u64 p_max, const DecideOptions& options = {});

}  // namespace binomgroup
