#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "binomgroup/bigint.hpp"
#include "binomgroup/perm.hpp"

namespace binomgroup {

/// Deterministic Schreier-Sims: base, strong generating set and explicit
/// (inverse) transversals. Generators may be added incrementally; the BSGS
/// property is restored after every call unless an order limit cut it short.
class StabilizerChain {
 public:
  using Point = Perm::Point;
  static constexpr std::size_t kDefaultMaxDegree = 8192;

  explicit StabilizerChain(std::size_t degree, std::size_t max_degree = kDefaultMaxDegree);

  // Stop building once the product of basic orbit lengths (a lower bound on the
  // group order at every stage) exceeds limit. Afterwards truncated() is true.
  void set_order_limit(BigInt limit) { order_limit_ = std::move(limit); }

  // Returns true iff g was not already a member.
  bool add_generator(const Perm& g);
  void add_generators(std::span<const Perm> gens);

  bool contains(const Perm& g) const;
  // Exact once complete; a lower bound if truncated().
  BigInt order() const;
  bool truncated() const { return truncated_; }

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  std::size_t strong_generator_count() const { return strong_.size(); }

 private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;     // indices into strong_
    std::vector<std::int32_t> slot;    // point -> position in orbit, or -1
    std::vector<Point> orbit;
    std::vector<Perm> inv_reps;        // inv_reps[pos] maps orbit[pos] back to base
    std::vector<std::size_t> applied;  // generators already applied at orbit[pos]
    std::vector<std::size_t> tested;   // Schreier generators already sifted at orbit[pos]
  };

  // Sift from level `from`; returns the residue and the level where sifting stopped
  // (levels_.size() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const;
  void push_level(Point base);
  void add_strong(Perm g, std::size_t upto_level);
  void extend_orbit(std::size_t level);
  void complete(std::size_t start_level);
  bool over_limit() const;

  std::size_t degree_;
  std::vector<Perm> strong_;
  std::vector<Perm> strong_inv_;
  std::vector<Level> levels_;
  std::optional<BigInt> order_limit_;
  bool truncated_ = false;
};

/// Exact order of <gens> (the identity group for an empty list).
/// Throws DegreeTooLarge when the degree exceeds max_degree.
BigInt bsgs_order(std::span<const Perm> gens,
                  std::size_t max_degree = StabilizerChain::kDefaultMaxDegree);

}  // namespace binomgroup
