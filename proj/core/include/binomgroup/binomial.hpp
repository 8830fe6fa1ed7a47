#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "binomgroup/ffield.hpp"
#include "binomgroup/perm.hpp"

namespace binomgroup {

/// The binomial a x^m + x^n (second coefficient normalised to 1) with its
/// reduction data: k = n - m, s = gcd(k, q-1), d = (q-1)/s, t = k/s.
struct Binomial {
  Elem a;
  u64 m = 0;
  u64 n = 0;
  u64 k = 0;
  u64 s = 0;
  u64 d = 0;
  u64 t = 0;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Throws ZeroCoefficient for a == 0 and ExponentRange unless 0 < m < n < q.
Binomial make_binomial(const FieldCtx& field, Elem a, u64 m, u64 n);

// Evaluates a x^m + b x^n at every point of F_q.
bool is_perm_bruteforce(const FieldCtx& field, Elem a, Elem b, u64 m, u64 n);

// x^m (a + x^k) permutes F_q iff gcd(m, s) = 1 and z -> z^(m t' mod d) (a + z)^s
// permutes mu_d, where t' = t^{-1} mod d. Cost O(d).
bool is_perm_reduced(const FieldCtx& field, const Binomial& bin);

/// One scalar-equivalence class of permutation binomials: gap gcd s, the
/// coefficient coset a in g^a_class (F_q^*)^s, and the reduced exponent
/// r = m t' mod d. `representative` is the realising literal with the smallest
/// t, then the smallest m, and a = g^a_class.
///
/// Substituting x -> c x turns a x^m + x^n into c^n (a c^{-k} x^m + x^n), so a
/// only matters modulo k-th powers, i.e. modulo (F_q^*)^s, once scalar maps are
/// in the group. Whether a literal preserves the cosets of mu_e depends only on
/// (s, a_class): in log coordinates it is i -> m i + psi(t i mod d), and
/// i -> i + e shifts the second term by an element of the subgroup generated by e
/// in Z/d, independently of m and t.
struct BinomialClass {
  u64 s = 0;
  u64 d = 0;
  u64 a_class = 0;
  u64 r = 0;
  Binomial representative;
};

// All classes that are realised by at least one literal pair 0 < m < n < q,
// in ascending (s, a_class, r) order. Cost O((q-1) * sigma(q-1)) field operations.
std::vector<BinomialClass> permutation_classes(const FieldCtx& field);

// Visits every literal (m, n) with 0 < m < n < q realising each class, with
// a = g^a_class. Stops early when the visitor returns false.
void for_each_literal(const FieldCtx& field, std::span<const BinomialClass> classes,
                      const std::function<bool(const Binomial&)>& visit);

struct GenEntry {
  Binomial binomial;
  Perm perm;
};

/// Generating data for G(q). Entries are deduplicated by induced permutation.
struct GenSet {
  const FieldCtx* field = nullptr;
  std::vector<GenEntry> gens;
  bool includes_scalar = false;

  bool empty() const { return gens.empty(); }
  // The listed permutations, followed by the scalar cycle when includes_scalar.
  std::vector<Perm> perms() const;
};

// One generator per class (permutation_classes), scalar not adjoined.
// Together with the scalar map these determine every coset partition preserved
// by G(q); they can generate a proper subgroup of G(q) (q = 13 is the smallest
// case), so group orders use literal_generators.
GenSet enumerate_generators(const FieldCtx& field);

// Every literal class member (up to scalar conjugation) with the scalar cycle
// adjoined: a generating set of G(q) whenever G(q) != 1. Memory O(#literals * q).
GenSet literal_generators(const FieldCtx& field);

// x^r - a x, returned as (-a) x + x^r when a^((q-1)/(r-1)) != 1.
// Throws BadFieldShape unless r is a power of p with q = r^k, k >= 2.
std::optional<Binomial> family_additive(const FieldCtx& field, u64 r, Elem a);

// x^(r+2) + a x over F_{r^2}, valid when a^(r-1) has order 6/gcd(r,2).
// Throws BadFieldShape (q != r^2), BadCongruence (r != 2 mod 3), DegreeOverflow (r = 2).
std::optional<Binomial> family_tz(const FieldCtx& field, u64 r, Elem a);

struct CountT {
  u64 count = 0;
  // (q-1)/gcd(n-m, q-1), the "s" of the lower bound on count.
  u64 s = 0;
};

// Number of a in F_q (zero included) with a x^m + x^n a permutation of F_q.
// Throws BadGcd unless gcd(m, n, q-1) = 1.
CountT count_T(const FieldCtx& field, u64 m, u64 n);

// a in F_q^* with x (a + x^((q-1)/s)) a permutation, ascending by log.
// Throws BadDivisor unless s | q-1 and s >= 2.
std::vector<Elem> coset_family_values(const FieldCtx& field, u64 s);
u64 count_N(const FieldCtx& field, u64 s);

struct KeypropHit {
  Elem a;
  u64 coset = 0;  // log residue mod (q-1)/d shared by the images of mu_d
};

// a in F_q^* for which x^(k+1) + a x sends all of mu_d into one coset of mu_d;
// a zero image disqualifies a. Throws BadDivisor unless d | q-1, k | q-1, d does not divide k.
std::vector<KeypropHit> keyprop_hits(const FieldCtx& field, u64 d, u64 k);
u64 keyprop_count(const FieldCtx& field, u64 d, u64 k);

}  // namespace binomgroup
