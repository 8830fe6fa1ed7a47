#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binomgroup/bigint.hpp"
#include "binomgroup/binomial.hpp"
#include "binomgroup/ffield.hpp"
#include "binomgroup/permgroup.hpp"

namespace binomgroup {

inline constexpr std::string_view kEngineVersion = "1.0.0";

/// n = (l^d - 1)/(l - 1) with l a prime power and d >= 2.
struct RepunitWitness {
  u64 ell = 0;
  unsigned d = 0;
  friend bool operator==(const RepunitWitness&, const RepunitWitness&) = default;
};

// Every representation of n as a repunit, ascending in d. Empty for n < 3.
std::vector<RepunitWitness> repunit_representations(u64 n);

enum class VerdictKind { Trivial, Symmetric, Alternating, Imprimitive, Undetermined };
enum class UndeterminedCase { None, AffineCase, ProjectiveCase, ParityOnly };

// How the verdict was reached.
enum class Route {
  NoGenerators,  // no permutation binomial exists
  BlockSystem,   // a coset partition survives
  RepunitFree,   // primitive, contains the (q-1)-cycle, n even and not a repunit
  Jordan,        // primitive and contains a p-cycle with p <= n - 3, then parity
  GroupOrder,    // exact order from Schreier-Sims
};

std::string_view to_string(VerdictKind kind);
std::string_view to_string(UndeterminedCase c);
std::string_view to_string(Route route);

// A group element g with exactly one cycle of prime length p <= n - 3 and every
// other cycle length prime to p, so a power of g is a p-cycle. g is the product
// word[0] * word[1] * ... of class generators; index generator_classes is the shift.
struct JordanWitness {
  std::vector<std::uint32_t> word;
  u64 prime = 0;
  friend bool operator==(const JordanWitness&, const JordanWitness&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Trivial;
  Route route = Route::NoGenerators;
  // Surviving d with 1 < d < q - 1 (Imprimitive only).
  std::vector<u64> divisors;
  UndeterminedCase undetermined = UndeterminedCase::None;
  std::optional<RepunitWitness> projective;  // ProjectiveCase data

  // Evidence.
  std::size_t generator_classes = 0;
  bool scalar_adjoined = false;
  std::optional<BigInt> order;  // exact group order when computed
  std::optional<JordanWitness> jordan;
  std::optional<Binomial> odd_generator;  // odd literal found by the parity scan
  std::size_t literals_scanned = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Imprimitive payload as "d1,d2,...", otherwise the kind (and case tag).
std::string describe(const Verdict& v);

struct DecideOptions {
  // Exact order of the full literal generating set is computed when q - 1 is at most this.
  std::size_t order_degree_limit = 32;
  // Largest degree handed to Schreier-Sims in the fallback.
  std::size_t bsgs_max_degree = StabilizerChain::kDefaultMaxDegree;
  // Length of the seeded random walk searching for a Jordan element.
  std::size_t jordan_walk = 20000;
  std::uint64_t seed = 0x62696e6f6dULL;
  u64 field_ceiling = FieldCtx::kDefaultCeiling;
};

Verdict decide_group(const FieldCtx& field, const DecideOptions& options = {});
Verdict decide_group(u64 q, const DecideOptions& options = {});

// gcd of gcd(n - m, q - 1) over all permutation binomials; 0 when there are none.
u64 r_of_q(const FieldCtx& field);
u64 r_of_classes(std::span<const BinomialClass> classes);

// phi(d) d^((q-1)/d) ((q-1)/d)!. Throws BadDivisor unless d | q - 1.
BigInt wanlidl_order(u64 q, u64 d);

struct QuotientReport {
  u64 e = 0;  // number of blocks
  std::vector<Perm> images;
  bool has_e_cycle = false;
  bool primitive = false;  // no coset partition of the image survives
  friend bool operator==(const QuotientReport&, const QuotientReport&) = default;
};

// Action on residue classes mod e. gens must contain the scalar shift and
// preserve the classes (NotBlockRespecting otherwise).
QuotientReport quotient_action(std::span<const Perm> gens, u64 e);

struct PrimStage {
  std::size_t generators = 0;  // binomials added in this stage
  std::vector<u64> survivors;  // preserved d < q - 1, ascending
};

struct PrimReport {
  u64 r = 0;
  u64 q = 0;
  PrimStage stage1;  // x^r - a x
  PrimStage stage2;  // + x^(r+2) + a x
  PrimStage stage3;  // + x (a + x^((q-1)/8))
  bool stage3_incomplete = false;  // no s = 8 binomial was found
  bool stage1_divides = false;     // all stage-1 survivors divide r - 1
  bool stage2_divides = false;     // all stage-2 survivors divide 2
  bool success() const { return stage3.survivors == std::vector<u64>{1}; }
};

// Throws BadCongruence unless r is a prime power with r = 2 (mod 3) and r = +-3 (mod 8).
PrimReport verify_prim_pipeline(u64 r, u64 ceiling = FieldCtx::kDefaultCeiling);

struct MzEntry {
  u64 p = 0;
  u64 min_gcd = 0;  // 0 when F_p has no permutation binomial
  double threshold = 0;  // p / (2 ln p)
  bool holds = true;  // vacuous when min_gcd == 0
};

struct MzReport {
  std::vector<MzEntry> entries;
  std::vector<u64> violations;
};

MzReport mz_scan(u64 p_max, u64 p_min = 3);

// gcd{(q-1)/d : d | q-1, d <= ln(q)/c} == 1  iff  lcm{d : same} == q - 1, with c = c_num / c_den.
bool gcd_lcm_identity_check(u64 q, u64 c_num, u64 c_den);

struct SurveyRecord {
  u64 q = 0;
  u64 p = 0;
  unsigned e = 0;
  Verdict verdict;
  u64 r_of_q = 0;
  std::vector<u64> surviving_divisors;  // all preserved d, 1 and q - 1 included; empty when Trivial
  // Action on F_q^* / mu_r(q) (or the largest surviving mu_d when r(q) = 1),
  // Imprimitive only. The induced permutations are not kept.
  std::optional<QuotientReport> quotient;
  double elapsed_ms = 0;
  std::string engine_version{kEngineVersion};
  std::vector<std::uint32_t> modulus;
  std::uint32_t generator = 0;
  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

SurveyRecord analyze(u64 q, const DecideOptions& options = {});

struct SurveyOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
  DecideOptions decide;
  // Called in ascending q order from the calling thread as records complete.
  std::function<void(const SurveyRecord&)> on_record;
  // q values to skip (already stored).
  std::function<bool(u64)> skip;
};

// One record per prime power in [q_min, q_max], ascending.
std::vector<SurveyRecord> survey(u64 q_min, u64 q_max, const SurveyOptions& options = {});

}  // namespace binomgroup
