#include "binomgroup/perm.hpp"

#include <algorithm>
#include <string>

#include "binomgroup/error.hpp"

namespace binomgroup {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorKind::NotAPermutation,
                  "image list of length " + std::to_string(images_.size()) + " is not a bijection");
    }
    seen[x] = true;
  }
}

Perm from_images_unchecked(std::vector<Perm::Point> images) {
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return from_images_unchecked(std::move(img));
}

Perm Perm::shift(std::size_t degree, std::size_t by) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>((i + by) % degree);
  return from_images_unchecked(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm compose(const Perm& outer, const Perm& inner) {
  if (outer.degree() != inner.degree()) {
    throw Error(ErrorKind::DegreeMismatch, std::to_string(outer.degree()) + " vs " +
                                               std::to_string(inner.degree()));
  }
  std::vector<Perm::Point> img(inner.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = outer.images_[inner.images_[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm inverse(const Perm& p) {
  std::vector<Perm::Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[p.images_[i]] = static_cast<Perm::Point>(i);
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm power(const Perm& p, std::uint64_t exponent) {
  // Walk each cycle once; cost O(degree) regardless of the exponent.
  const std::size_t n = p.degree();
  std::vector<Perm::Point> img(n);
  std::vector<bool> seen(n, false);
  std::vector<Perm::Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (auto x = static_cast<Perm::Point>(start); !seen[x]; x = p.images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    const std::size_t len = cycle.size();
    const std::size_t step = exponent % len;
    for (std::size_t i = 0; i < len; ++i) img[cycle[i]] = cycle[(i + step) % len];
  }
  return Perm(std::move(img), Perm::Unchecked{});
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (auto x = static_cast<Perm::Point>(start); !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Parity parity(const Perm& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto x = static_cast<Perm::Point>(start); !seen[x]; x = p(x)) seen[x] = true;
  }
  return (n - cycles) % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool is_full_cycle(const Perm& p) {
  const std::size_t n = p.degree();
  if (n == 0) return false;
  std::size_t len = 0;
  Perm::Point x = 0;
  do {
    x = p(x);
    ++len;
  } while (x != 0 && len <= n);
  return len == n;
}

std::size_t fixed_points(const Perm& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) count += p(static_cast<Perm::Point>(i)) == i;
  return count;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Perm::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace binomgroup
