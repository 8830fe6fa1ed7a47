#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "binomgroup/binomial.hpp"
#include "binomgroup/bsgs.hpp"
#include "binomgroup/ffield.hpp"
#include "binomgroup/perm.hpp"

namespace binomgroup {

// images[i] = log(a g^(i m) + g^(i n)). Throws NotAPermutation if the map is not bijective.
Perm perm_from_binomial(const FieldCtx& field, const Binomial& bin);

// x -> g x, i.e. i -> i + 1 mod q - 1.
Perm scalar_cycle(const FieldCtx& field);

// A pair i = j (mod e) whose images differ mod e.
struct ClassWitness {
  Perm::Point i = 0;
  Perm::Point j = 0;
};

// nullopt iff p maps residue classes mod e onto residue classes mod e.
// Throws BadDivisor unless e divides the degree.
std::optional<ClassWitness> mod_class_witness(const Perm& p, std::size_t e);
inline bool preserves_mod_classes(const Perm& p, std::size_t e) {
  return !mod_class_witness(p, e).has_value();
}

struct BlockWitness {
  u64 d = 0;                // mu_d whose cosets are broken
  std::size_t generator = 0;  // index into the generator list
  ClassWitness pair;
};

struct BlockReport {
  u64 degree = 0;
  // Ascending; always contains 1 and degree.
  std::vector<u64> divisors_preserved;
  std::vector<BlockWitness> witnesses;

  // Preserved d with 1 < d < degree.
  std::vector<u64> nontrivial() const;
  bool primitive() const { return nontrivial().empty(); }
};

// Coset partitions by mu_d (d | degree) preserved by every generator.
// The scalar shift must be among gens (MissingScalar otherwise): only then is
// every invariant partition a coset partition.
BlockReport invariant_divisors(std::span<const Perm> gens);

}  // namespace binomgroup
