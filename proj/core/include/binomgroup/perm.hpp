#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binomgroup {

/// Permutation of {0, ..., degree-1}; images()[i] is the image of i.
/// For elements of G(q) the points are discrete logs of F_q^*.
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  // Throws NotAPermutation unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // i -> i + by (mod degree)
  static Perm shift(std::size_t degree, std::size_t by = 1);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
  friend Perm power(const Perm&, std::uint64_t);
  friend Perm from_images_unchecked(std::vector<Point> images);

  std::vector<Point> images_;
};

// Trusted constructor for hot paths whose callers have already established bijectivity.
Perm from_images_unchecked(std::vector<Perm::Point> images);

enum class Parity { Even, Odd };

// (outer ∘ inner)(x) = outer(inner(x)). Throws DegreeMismatch.
Perm compose(const Perm& outer, const Perm& inner);
Perm inverse(const Perm& p);
Perm power(const Perm& p, std::uint64_t exponent);
Parity parity(const Perm& p);
// Cycle lengths (fixed points included as 1-cycles), sorted descending.
std::vector<std::size_t> cycle_type(const Perm& p);
bool is_full_cycle(const Perm& p);
std::size_t fixed_points(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace binomgroup
