#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  u64 p = 2;
  while (n % p != 0) ++p;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, e};
}

namespace {

using Poly = std::vector<u64>;

Poly decode(u64 x, u64 p, unsigned e) {
  Poly out(e);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

u64 encode(const Poly& a, u64 p) {
  u64 x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

Poly reduce(Poly a, const std::vector<std::uint32_t>& f, u64 p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t i = a.size(); i-- > e;) {
    const u64 c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= e; ++j) a[i - e + j] = (a[i - e + j] + (p - c) * f[j]) % p;
  }
  a.resize(e);
  return a;
}

}  // namespace

NaiveField::NaiveField(u64 p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  if (!irreducible_by_products(p_, modulus_)) throw std::logic_error("modulus is reducible");
}

u64 NaiveField::add(u64 x, u64 y) const {
  Poly a = decode(x, p_, e_), b = decode(y, p_, e_);
  for (unsigned i = 0; i < e_; ++i) a[i] = (a[i] + b[i]) % p_;
  return encode(a, p_);
}

u64 NaiveField::neg(u64 x) const {
  Poly a = decode(x, p_, e_);
  for (auto& c : a) c = (p_ - c) % p_;
  return encode(a, p_);
}

u64 NaiveField::mul(u64 x, u64 y) const {
  const Poly a = decode(x, p_, e_), b = decode(y, p_, e_);
  Poly c(2 * e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < e_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  }
  return encode(reduce(c, modulus_, p_), p_);
}

u64 NaiveField::pow(u64 x, u64 k) const {
  u64 r = 1;
  while (k) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

u64 NaiveField::order(u64 x) const {
  u64 y = x, k = 1;
  while (y != 1) {
    y = mul(y, x);
    ++k;
    if (k > q_) throw std::logic_error("element has no finite order");
  }
  return k;
}

bool binomial_permutes(const NaiveField& f, u64 a, u64 b, u64 m, u64 n) {
  std::vector<bool> seen(f.q(), false);
  for (u64 x = 0; x < f.q(); ++x) {
    const u64 v = f.add(f.mul(a, f.pow(x, m)), f.mul(b, f.pow(x, n)));
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool irreducible_by_products(u64 p, const std::vector<std::uint32_t>& monic) {
  const unsigned e = static_cast<unsigned>(monic.size() - 1);
  // Try every monic g of degree 1..e-1 and every monic h of degree e - deg g.
  for (unsigned dg = 1; dg < e; ++dg) {
    const unsigned dh = e - dg;
    u64 ng = 1, nh = 1;
    for (unsigned i = 0; i < dg; ++i) ng *= p;
    for (unsigned i = 0; i < dh; ++i) nh *= p;
    for (u64 gi = 0; gi < ng; ++gi) {
      Poly g = decode(gi, p, dg);
      g.push_back(1);
      for (u64 hi = 0; hi < nh; ++hi) {
        Poly h = decode(hi, p, dh);
        h.push_back(1);
        bool equal = true;
        for (unsigned k = 0; k <= e && equal; ++k) {
          u64 c = 0;
          for (unsigned i = 0; i <= dg; ++i) {
            if (k >= i && k - i <= dh) c = (c + g[i] * h[k - i]) % p;
          }
          equal = c == monic[k];
        }
        if (equal) return false;
      }
    }
  }
  return true;
}

std::optional<u64> closure_order(const std::vector<binomgroup::Perm>& gens, u64 cap) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().degree();
  std::unordered_set<binomgroup::Perm, binomgroup::PermHash> seen;
  std::deque<binomgroup::Perm> todo;
  seen.insert(binomgroup::Perm::identity(n));
  todo.push_back(binomgroup::Perm::identity(n));
  while (!todo.empty()) {
    const binomgroup::Perm x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      // Plain right multiplication by each generator, images composed by hand.
      std::vector<binomgroup::Perm::Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = g(x(static_cast<binomgroup::Perm::Point>(i)));
      binomgroup::Perm y(std::move(img));
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        todo.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::vector<std::vector<std::pair<u64, unsigned>>> repunit_table(u64 n_max) {
  std::vector<std::vector<std::pair<u64, unsigned>>> out(n_max + 1);
  for (u64 l = 2; l < n_max; ++l) {
    if (!prime_power(l)) continue;
    u64 v = 1 + l;
    for (unsigned d = 2; v <= n_max; ++d) {
      out[v].emplace_back(l, d);
      v = v * l + 1;
    }
  }
  for (auto& reps : out) std::sort(reps.begin(), reps.end(), [](auto x, auto y) { return x.second < y.second; });
  return out;
}

bool odd_by_inversions(const binomgroup::Perm& p) {
  u64 inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    for (std::size_t j = i + 1; j < p.degree(); ++j) {
      inv += p(static_cast<binomgroup::Perm::Point>(i)) > p(static_cast<binomgroup::Perm::Point>(j));
    }
  }
  return inv % 2 == 1;
}

}  // namespace oracle
