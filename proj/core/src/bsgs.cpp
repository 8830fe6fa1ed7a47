#include "binomgroup/bsgs.hpp"

#include <string>

#include "binomgroup/error.hpp"

namespace binomgroup {

StabilizerChain::StabilizerChain(std::size_t degree, std::size_t max_degree) : degree_(degree) {
  if (degree > max_degree) {
    throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(degree) +
                                               " exceeds the BSGS ceiling " +
                                               std::to_string(max_degree));
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm h, std::size_t from) const {
  std::vector<Point> tmp(degree_);
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const Point x = h(lv.base);
    const std::int32_t pos = lv.slot[x];
    if (pos < 0) return {std::move(h), l};
    if (x == lv.base) continue;
    const auto u_inv = lv.inv_reps[static_cast<std::size_t>(pos)].images();
    const auto img = h.images();
    for (std::size_t i = 0; i < degree_; ++i) tmp[i] = u_inv[img[i]];
    h = from_images_unchecked(tmp);
  }
  return {std::move(h), levels_.size()};
}

void StabilizerChain::push_level(Point base) {
  Level lv;
  lv.base = base;
  lv.slot.assign(degree_, -1);
  lv.slot[base] = 0;
  lv.orbit.push_back(base);
  lv.inv_reps.push_back(Perm::identity(degree_));
  lv.applied.push_back(0);
  lv.tested.push_back(0);
  levels_.push_back(std::move(lv));
}

void StabilizerChain::add_strong(Perm g, std::size_t upto_level) {
  if (upto_level == levels_.size()) {
    Point moved = 0;
    while (g(moved) == moved) ++moved;
    push_level(moved);
  }
  const std::size_t idx = strong_.size();
  strong_inv_.push_back(inverse(g));
  strong_.push_back(std::move(g));
  for (std::size_t l = 0; l <= upto_level; ++l) levels_[l].gens.push_back(idx);
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level& lv = levels_[level];
  for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    for (std::size_t gi = lv.applied[pos]; gi < lv.gens.size(); ++gi) {
      const std::size_t s = lv.gens[gi];
      const Point y = strong_[s](lv.orbit[pos]);
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      // u_y = s ∘ u_x, so u_y^{-1} = u_x^{-1} ∘ s^{-1}
      lv.inv_reps.push_back(compose(lv.inv_reps[pos], strong_inv_[s]));
      lv.applied.push_back(0);
      lv.tested.push_back(0);
    }
    lv.applied[pos] = lv.gens.size();
  }
}

bool StabilizerChain::over_limit() const {
  return order_limit_.has_value() && order() > *order_limit_;
}

void StabilizerChain::complete(std::size_t start_level) {
  auto i = static_cast<std::ptrdiff_t>(start_level);
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    extend_orbit(level);
    if (over_limit()) {
      truncated_ = true;
      return;
    }
    bool restarted = false;
    Level& lv = levels_[level];
    for (std::size_t pos = 0; pos < lv.orbit.size() && !restarted; ++pos) {
      while (lv.tested[pos] < lv.gens.size()) {
        const std::size_t s = lv.gens[lv.tested[pos]++];
        const Point sx = strong_[s](lv.orbit[pos]);
        const Perm& u_sx_inv = lv.inv_reps[static_cast<std::size_t>(lv.slot[sx])];
        // u_{s(x)}^{-1} ∘ s ∘ u_x fixes the base point of this level.
        const Perm u_x = inverse(lv.inv_reps[pos]);
        Perm schreier = compose(u_sx_inv, compose(strong_[s], u_x));
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(std::move(schreier), level + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        add_strong(std::move(residue), stop);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool StabilizerChain::add_generator(const Perm& g) {
  if (g.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "generator degree " + std::to_string(g.degree()) +
                                               " vs chain degree " + std::to_string(degree_));
  }
  if (truncated_) return false;
  if (contains(g)) return false;
  add_strong(g, 0);
  complete(0);
  return true;
}

void StabilizerChain::add_generators(std::span<const Perm> gens) {
  for (const Perm& g : gens) {
    if (truncated_) return;
    add_generator(g);
  }
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const Level& lv : levels_) out *= lv.orbit.size();
  return out;
}

std::vector<StabilizerChain::Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const Level& lv : levels_) out.push_back(lv.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const Level& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

BigInt bsgs_order(std::span<const Perm> gens, std::size_t max_degree) {
  if (gens.empty()) return 1;
  StabilizerChain chain(gens.front().degree(), max_degree);
  chain.add_generators(gens);
  return chain.order();
}

}  // namespace binomgroup
