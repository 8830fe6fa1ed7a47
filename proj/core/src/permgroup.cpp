#include "binomgroup/permgroup.hpp"

#include <algorithm>
#include <string>

#include "binomgroup/error.hpp"

namespace binomgroup {

Perm perm_from_binomial(const FieldCtx& field, const Binomial& bin) {
  const u64 order = field.order();
  std::vector<Perm::Point> images(order);
  std::vector<bool> hit(order, false);
  const u64 m = bin.m % order;
  const u64 n = bin.n % order;
  for (u64 i = 0; i < order; ++i) {
    const Elem v = field.add(field.mul(bin.a, field.from_log(i * m)), field.from_log(i * n));
    if (v.is_zero() || hit[v.log()]) {
      throw Error(ErrorKind::NotAPermutation,
                  "binomial x^" + std::to_string(bin.m) + "(a + x^" + std::to_string(bin.k) +
                      ") is not a permutation of F_" + std::to_string(field.q()));
    }
    hit[v.log()] = true;
    images[i] = v.log();
  }
  return from_images_unchecked(std::move(images));
}

Perm scalar_cycle(const FieldCtx& field) { return Perm::shift(field.order(), 1); }

std::optional<ClassWitness> mod_class_witness(const Perm& p, std::size_t e) {
  const std::size_t n = p.degree();
  if (e == 0 || n % e != 0) {
    throw Error(ErrorKind::BadDivisor,
                std::to_string(e) + " does not divide the degree " + std::to_string(n));
  }
  for (std::size_t i = 0; i < e; ++i) {
    const std::size_t want = p(static_cast<Perm::Point>(i)) % e;
    for (std::size_t j = i + e; j < n; j += e) {
      if (p(static_cast<Perm::Point>(j)) % e != want) {
        return ClassWitness{static_cast<Perm::Point>(i), static_cast<Perm::Point>(j)};
      }
    }
  }
  return std::nullopt;
}

std::vector<u64> BlockReport::nontrivial() const {
  std::vector<u64> out;
  for (u64 d : divisors_preserved) {
    if (d != 1 && d != degree) out.push_back(d);
  }
  return out;
}

BlockReport invariant_divisors(std::span<const Perm> gens) {
  if (gens.empty()) throw Error(ErrorKind::MissingScalar, "empty generator list");
  const std::size_t n = gens.front().degree();
  for (const Perm& g : gens) {
    if (g.degree() != n) throw Error(ErrorKind::DegreeMismatch, "generators of unequal degree");
  }
  const Perm shift = Perm::shift(n, 1);
  if (std::none_of(gens.begin(), gens.end(), [&](const Perm& g) { return g == shift; })) {
    throw Error(ErrorKind::MissingScalar, "the scalar cycle i -> i+1 is not among the generators");
  }
  BlockReport report;
  report.degree = n;
  for (u64 d : divisors(n)) {
    const std::size_t e = n / d;  // mu_d cosets are residues mod e
    bool kept = true;
    for (std::size_t gi = 0; gi < gens.size() && kept; ++gi) {
      if (auto w = mod_class_witness(gens[gi], e)) {
        report.witnesses.push_back(BlockWitness{d, gi, *w});
        kept = false;
      }
    }
    if (kept) report.divisors_preserved.push_back(d);
  }
  return report;
}

}  // namespace binomgroup
