#include "binomgroup/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binomgroup/error.hpp"

namespace binomgroup {
namespace {

constexpr u64 kSegment = u64{1} << 18;

void check_bound(u64 bound) {
  if (bound > kMaxSieveBound) {
    throw Error(ErrorKind::BoundTooLarge, "N=" + std::to_string(bound) + " exceeds 10^14");
  }
}

void apply_exclusions(SieveReport& rep, u64 r) {
  ++rep.congruent;
  if (is_prime_power(r * r - 2)) {
    ++rep.d2_excluded;
    return;
  }
  bool excluded = false;
  for (const RepunitWitness& w : repunit_representations(r * r - 1)) {
    if (w.d < 3) continue;
    excluded = true;
    if (w.d % 2 == 1) ++rep.odd_d_witnesses;
  }
  if (excluded) {
    ++rep.repunit_excluded;
    return;
  }
  rep.qualifying.push_back(r);
}

}  // namespace

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  const u64 root = isqrt(limit);
  std::vector<bool> small(root + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = false;
  }
  std::vector<char> seg(kSegment);
  for (u64 lo = 2; lo <= limit; lo += kSegment) {
    const u64 hi = std::min(limit, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (u64 p : base) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (u64 x = lo; x <= hi; ++x) {
      if (seg[x - lo]) out.push_back(x);
    }
  }
  return out;
}

bool sieve_congruences(u64 r) {
  const u64 r8 = r % 8, r7 = r % 7, r17 = r % 17;
  return r % 3 == 2 && (r8 == 3 || r8 == 5) && (r7 == 3 || r7 == 4) && (r17 == 6 || r17 == 11);
}

std::vector<u64> crt_residues() {
  struct Congruence {
    u64 modulus;
    std::vector<u64> residues;
  };
  const std::vector<Congruence> system{{3, {2}}, {8, {3, 5}}, {7, {3, 4}}, {17, {6, 11}}};
  std::vector<u64> acc{0};
  u64 mod = 1;
  for (const Congruence& c : system) {
    std::vector<u64> next;
    // x = a (mod mod), x = b (mod c.modulus): x = a + mod * ((b - a) mod^-1 mod c.modulus)
    const u64 inv = inverse_mod(mod % c.modulus, c.modulus);
    for (u64 a : acc) {
      for (u64 b : c.residues) {
        const u64 diff = (b + c.modulus - a % c.modulus) % c.modulus;
        next.push_back(a + mod * (diff * inv % c.modulus));
      }
    }
    mod *= c.modulus;
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

bool repunit_free_square(u64 r) {
  if (r < 2) return false;
  if (is_prime_power(r * r - 2)) return false;
  return repunit_representations(r * r - 1).empty();
}

SieveReport qualifying_primes(u64 bound) {
  check_bound(bound);
  SieveReport rep;
  rep.bound = bound;
  rep.root = isqrt(bound);
  const auto residues = crt_residues();
  std::vector<u64> candidates;
  for (u64 base = 0; base <= rep.root; base += kSieveModulus) {
    for (u64 c : residues) {
      const u64 r = base + c;
      if (r <= rep.root && is_prime(r)) candidates.push_back(r);
    }
  }
  for (u64 r : candidates) apply_exclusions(rep, r);
  if (bound > 1) {
    const double nb = static_cast<double>(bound);
    rep.expected = std::sqrt(nb) / (48.0 * std::log(nb));
    rep.ratio = static_cast<double>(rep.qualifying.size()) / rep.expected;
    rep.flagged = std::abs(rep.ratio - 1.0) > 0.25;
  }
  return rep;
}

std::vector<u64> qualifying_primes_filter(u64 bound) {
  check_bound(bound);
  std::vector<u64> out;
  for (u64 r : primes_up_to(isqrt(bound))) {
    if (sieve_congruences(r) && repunit_free_square(r)) out.push_back(r);
  }
  return out;
}

RepunitTail repunit_tail_count(u64 bound) {
  RepunitTail out;
  if (bound < 2) return out;
  for (u64 ell = 2; ell <= iroot(bound, 3); ++ell) {
    if (!is_prime_power(ell)) continue;
    // 1 + l + l^2 + l^3, then keep extending.
    unsigned __int128 term = static_cast<unsigned __int128>(ell) * ell * ell;
    unsigned __int128 sum = 1 + ell + static_cast<unsigned __int128>(ell) * ell + term;
    while (sum <= bound) {
      ++out.count;
      term *= ell;
      sum += term;
    }
  }
  const double nb = static_cast<double>(bound);
  out.bound = std::log2(nb) * std::cbrt(nb);
  out.within = static_cast<double>(out.count) <= out.bound;
  return out;
}

DensityReport density_check(u64 p_max, const DecideOptions& options) {
  DensityReport rep;
  for (u64 p : primes_up_to(p_max)) {
    DensityEntry entry;
    entry.p = p;
    entry.verdict = decide_group(p * p, options).kind;
    entry.mod24_congruences = p % 3 == 2 && (p % 8 == 3 || p % 8 == 5);
    entry.sieve_qualifying = sieve_congruences(p) && repunit_free_square(p);
    if (entry.verdict == VerdictKind::Symmetric) ++rep.symmetric;
    if (entry.mod24_congruences) ++rep.mod24_congruent;
    rep.entries.push_back(entry);
  }
  if (!rep.entries.empty()) {
    rep.fraction = static_cast<double>(rep.symmetric) / static_cast<double>(rep.entries.size());
  }
  return rep;
}

}  // namespace binomgroup
