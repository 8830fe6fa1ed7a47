#include "binomgroup/binomial.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

#include "binomgroup/error.hpp"
#include "binomgroup/permgroup.hpp"

namespace binomgroup {
namespace {

// Reusable "seen" marks; an epoch bump clears them in O(1).
class Marks {
 public:
  void reset(std::size_t size) {
    if (stamp_.size() < size) stamp_.resize(size, 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  // Returns false if i was already marked in this epoch.
  bool mark(std::size_t i) {
    if (stamp_[i] == epoch_) return false;
    stamp_[i] = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// psi[u] = log(a + g^(s u)) for u in [0, d); false if some a + g^(s u) vanishes.
bool coset_logs(const FieldCtx& field, u64 s, u64 d, Elem a, std::vector<std::uint32_t>& psi) {
  psi.resize(d);
  for (u64 u = 0; u < d; ++u) {
    const Elem v = field.add(a, field.from_log(s * u));
    if (v.is_zero()) return false;
    psi[u] = v.log();
  }
  return true;
}

// Does z -> z^r (a + z)^s permute mu_d? In the index of z = g^(s u) this is u -> r u + psi[u] (mod d).
bool reduced_permutes(std::span<const std::uint32_t> psi, u64 d, u64 r, Marks& marks) {
  marks.reset(d);
  for (u64 u = 0; u < d; ++u) {
    if (!marks.mark((r * u + psi[u]) % d)) return false;
  }
  return true;
}

// Smallest realising literal (t first, then m) for the class (s, d, r), or nullopt.
std::optional<std::pair<u64, u64>> realise(u64 n, u64 s, u64 d, u64 r) {
  for (u64 t = 1; t < d; ++t) {
    if (std::gcd(t, d) != 1) continue;
    const u64 k = s * t;
    u64 m = (r * t) % d;
    if (m == 0) m = d;
    for (; m + k <= n; m += d) {
      if (std::gcd(m, s) == 1) return std::pair{m, m + k};
    }
  }
  return std::nullopt;
}

}  // namespace

Binomial make_binomial(const FieldCtx& field, Elem a, u64 m, u64 n) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "binomial coefficient a is zero");
  if (!(0 < m && m < n && n < field.q())) {
    throw Error(ErrorKind::ExponentRange, "need 0 < m < n < q, got m=" + std::to_string(m) +
                                              " n=" + std::to_string(n) +
                                              " q=" + std::to_string(field.q()));
  }
  Binomial b;
  b.a = a;
  b.m = m;
  b.n = n;
  b.k = n - m;
  b.s = std::gcd(b.k, u64{field.order()});
  b.d = field.order() / b.s;
  b.t = b.k / b.s;
  return b;
}

bool is_perm_bruteforce(const FieldCtx& field, Elem a, Elem b, u64 m, u64 n) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "zero coefficient");
  if (!(0 < m && m < n && n < field.q())) {
    throw Error(ErrorKind::ExponentRange, "need 0 < m < n < q");
  }
  const u64 order = field.order();
  std::vector<bool> seen(order, false);
  // f(0) = 0, so f permutes F_q iff it permutes F_q^*.
  for (u64 i = 0; i < order; ++i) {
    const Elem x = field.from_log(i);
    const Elem v = field.add(field.mul(a, field.pow(x, static_cast<std::int64_t>(m))),
                             field.mul(b, field.pow(x, static_cast<std::int64_t>(n))));
    if (v.is_zero() || seen[v.log()]) return false;
    seen[v.log()] = true;
  }
  return true;
}

bool is_perm_reduced(const FieldCtx& field, const Binomial& bin) {
  if (std::gcd(bin.m, bin.s) != 1) return false;
  const u64 d = bin.d;
  const u64 t_inv = inverse_mod(bin.t % d, d);
  const u64 r = (bin.m % d) * t_inv % d;
  std::vector<std::uint32_t> psi;
  if (!coset_logs(field, bin.s, d, bin.a, psi)) return false;
  Marks marks;
  return reduced_permutes(psi, d, r, marks);
}

std::vector<BinomialClass> permutation_classes(const FieldCtx& field) {
  std::vector<BinomialClass> out;
  const u64 n = field.order();
  if (n < 2) return out;
  Marks marks;
  std::vector<std::uint32_t> psi;
  for (u64 s : divisors(n)) {
    const u64 d = n / s;
    if (d < 2) continue;
    for (u64 j = 0; j < s; ++j) {
      const Elem a = field.from_log(j);
      if (!coset_logs(field, s, d, a, psi)) continue;
      for (u64 r = 0; r < d; ++r) {
        if (!reduced_permutes(psi, d, r, marks)) continue;
        auto lit = realise(n, s, d, r);
        if (!lit) continue;
        out.push_back(BinomialClass{s, d, j, r, make_binomial(field, a, lit->first, lit->second)});
      }
    }
  }
  return out;
}

void for_each_literal(const FieldCtx& field, std::span<const BinomialClass> classes,
                      const std::function<bool(const Binomial&)>& visit) {
  const u64 n = field.order();
  for (const BinomialClass& c : classes) {
    const Elem a = field.from_log(c.a_class);
    for (u64 t = 1; t < c.d; ++t) {
      if (std::gcd(t, c.d) != 1) continue;
      const u64 k = c.s * t;
      u64 m = (c.r * t) % c.d;
      if (m == 0) m = c.d;
      for (; m + k <= n; m += c.d) {
        if (std::gcd(m, c.s) != 1) continue;
        if (!visit(make_binomial(field, a, m, m + k))) return;
      }
    }
  }
}

std::vector<Perm> GenSet::perms() const {
  std::vector<Perm> out;
  out.reserve(gens.size() + 1);
  for (const GenEntry& g : gens) out.push_back(g.perm);
  if (includes_scalar && field != nullptr) out.push_back(scalar_cycle(*field));
  return out;
}

GenSet enumerate_generators(const FieldCtx& field) {
  GenSet set;
  set.field = &field;
  std::unordered_set<Perm, PermHash> seen;
  for (const BinomialClass& c : permutation_classes(field)) {
    Perm p = perm_from_binomial(field, c.representative);
    if (!seen.insert(p).second) continue;
    set.gens.push_back(GenEntry{c.representative, std::move(p)});
  }
  return set;
}

GenSet literal_generators(const FieldCtx& field) {
  GenSet set;
  set.field = &field;
  const auto classes = permutation_classes(field);
  std::unordered_set<Perm, PermHash> seen;
  for_each_literal(field, classes, [&](const Binomial& b) {
    Perm p = perm_from_binomial(field, b);
    if (seen.insert(p).second) set.gens.push_back(GenEntry{b, std::move(p)});
    return true;
  });
  set.includes_scalar = !set.gens.empty();
  return set;
}

std::optional<Binomial> family_additive(const FieldCtx& field, u64 r, Elem a) {
  const u64 q = field.q();
  auto rp = prime_power(r);
  bool shape_ok = rp && rp->p == field.p() && r < q;
  if (shape_ok) {
    u64 v = r;
    while (v < q) v *= r;
    shape_ok = v == q;
  }
  if (!shape_ok) {
    throw Error(ErrorKind::BadFieldShape,
                "q=" + std::to_string(q) + " is not a proper power of r=" + std::to_string(r));
  }
  if (a.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "a must be nonzero");
  if (field.pow(a, static_cast<std::int64_t>((q - 1) / (r - 1))) == field.one()) return std::nullopt;
  return make_binomial(field, field.neg(a), 1, r);
}

std::optional<Binomial> family_tz(const FieldCtx& field, u64 r, Elem a) {
  if (r < 2 || r * r != field.q()) {
    throw Error(ErrorKind::BadFieldShape,
                "q=" + std::to_string(field.q()) + " is not r^2 for r=" + std::to_string(r));
  }
  if (r % 3 != 2) throw Error(ErrorKind::BadCongruence, "r must be 2 mod 3");
  if (r == 2) throw Error(ErrorKind::DegreeOverflow, "r = 2 gives degree r + 2 = q");
  if (a.is_zero()) throw Error(ErrorKind::ZeroCoefficient, "a must be nonzero");
  const u64 want = 6 / std::gcd(r, u64{2});
  if (field.mult_order(field.pow(a, static_cast<std::int64_t>(r - 1))) != want) return std::nullopt;
  return make_binomial(field, a, 1, r + 2);
}

CountT count_T(const FieldCtx& field, u64 m, u64 n) {
  const u64 order = field.order();
  if (std::gcd(std::gcd(m, n), order) != 1) {
    throw Error(ErrorKind::BadGcd, "gcd(m, n, q-1) != 1");
  }
  CountT out;
  out.s = order / std::gcd(n - m, order);
  // a = 0 leaves the monomial x^n.
  if (std::gcd(n, order) == 1) ++out.count;
  for (u64 i = 0; i < order; ++i) {
    if (is_perm_reduced(field, make_binomial(field, field.from_log(i), m, n))) ++out.count;
  }
  return out;
}

std::vector<Elem> coset_family_values(const FieldCtx& field, u64 s) {
  const u64 order = field.order();
  if (s < 2 || order % s != 0) {
    throw Error(ErrorKind::BadDivisor, "s=" + std::to_string(s) + " must divide q-1 and be >= 2");
  }
  const u64 k = order / s;
  std::vector<Elem> out;
  for (u64 i = 0; i < order; ++i) {
    const Elem a = field.from_log(i);
    if (is_perm_reduced(field, make_binomial(field, a, 1, 1 + k))) out.push_back(a);
  }
  return out;
}

u64 count_N(const FieldCtx& field, u64 s) { return coset_family_values(field, s).size(); }

std::vector<KeypropHit> keyprop_hits(const FieldCtx& field, u64 d, u64 k) {
  const u64 order = field.order();
  if (d == 0 || k == 0 || order % d != 0 || order % k != 0 || k % d == 0) {
    throw Error(ErrorKind::BadDivisor, "need d | q-1, k | q-1 and d not dividing k (d=" +
                                           std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
  const u64 e = order / d;  // mu_d = { g^(e u) }, cosets of mu_d are log classes mod e
  std::vector<KeypropHit> hits;
  for (u64 i = 0; i < order; ++i) {
    const Elem a = field.from_log(i);
    std::optional<u64> coset;
    bool same = true;
    for (u64 u = 0; u < d && same; ++u) {
      const Elem zeta = field.from_log(e * u);
      const Elem v = field.add(field.pow(zeta, static_cast<std::int64_t>(k + 1)), field.mul(a, zeta));
      if (v.is_zero()) {
        same = false;
        break;
      }
      const u64 c = v.log() % e;
      if (!coset) coset = c;
      same = *coset == c;
    }
    if (same) hits.push_back(KeypropHit{a, *coset});
  }
  if (hits.size() > d) {
    throw Error(ErrorKind::Internal, "coset bound violated: " + std::to_string(hits.size()) +
                                         " values exceed d=" + std::to_string(d));
  }
  return hits;
}

u64 keyprop_count(const FieldCtx& field, u64 d, u64 k) { return keyprop_hits(field, d, k).size(); }

}  // namespace binomgroup
