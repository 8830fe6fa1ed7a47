#include "binomgroup/classify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "binomgroup/bsgs.hpp"
#include "binomgroup/error.hpp"

namespace binomgroup {
namespace {

BigInt repunit(u64 ell, unsigned d) {
  BigInt v = 0;
  for (unsigned i = 0; i < d; ++i) v = v * ell + 1;
  return v;
}

// A prime p <= n - 3 occurring exactly once as a cycle length, no other length divisible by p.
std::optional<u64> jordan_prime(const Perm& g) {
  const auto lengths = cycle_type(g);
  const std::size_t n = g.degree();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const u64 p = lengths[i];
    if (p < 2 || p + 3 > n || !is_prime(p)) continue;
    if (i > 0 && lengths[i - 1] == p) continue;  // sorted descending; only the first of a run
    bool alone = true;
    for (std::size_t j = 0; j < lengths.size() && alone; ++j) {
      if (j != i && lengths[j] % p == 0) alone = false;
    }
    if (alone) return p;
  }
  return std::nullopt;
}

// Products of 2..6 generators drawn from a seeded stream; the first Jordan element wins.
std::optional<JordanWitness> jordan_search(std::span<const Perm> gens, std::size_t attempts,
                                           std::uint64_t seed) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (auto p = jordan_prime(gens[i])) return JordanWitness{{static_cast<std::uint32_t>(i)}, *p};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(gens.size() - 1));
  for (std::size_t a = 0; a < attempts; ++a) {
    JordanWitness w;
    w.word.push_back(pick(rng));
    Perm g = gens[w.word.back()];
    const std::size_t len = 2 + a % 5;
    while (w.word.size() < len) {
      w.word.push_back(pick(rng));
      g = compose(g, gens[w.word.back()]);
    }
    if (auto p = jordan_prime(g)) {
      w.prime = *p;
      return w;
    }
  }
  return std::nullopt;
}

struct Decided {
  Verdict verdict;
  std::vector<BinomialClass> classes;
};

Decided decide_impl(const FieldCtx& field, const DecideOptions& options) {
  Decided out;
  Verdict& v = out.verdict;
  const u64 n = field.order();
  if (n < 2) return out;
  out.classes = permutation_classes(field);
  const auto& classes = out.classes;
  v.generator_classes = classes.size();
  if (classes.empty()) return out;
  v.scalar_adjoined = true;

  const Perm shift = scalar_cycle(field);
  const auto reps = repunit_representations(n);
  const bool repunit_free_even = n % 2 == 0 && reps.empty();
  const bool small = n <= options.order_degree_limit;

  // Block test per class representative; perms are kept only if the ladder may need them.
  std::vector<u64> alive;
  for (u64 d : divisors(n)) {
    if (d != 1 && d != n) alive.push_back(d);
  }
  std::vector<Perm> class_perms;
  const bool keep = !repunit_free_even;
  for (const BinomialClass& c : classes) {
    Perm g = perm_from_binomial(field, c.representative);
    std::erase_if(alive, [&](u64 d) { return !preserves_mod_classes(g, n / d); });
    if (keep) class_perms.push_back(std::move(g));
  }

  auto exact_order = [&] {
    auto gens = literal_generators(field).perms();
    return bsgs_order(gens, options.bsgs_max_degree);
  };

  if (!alive.empty()) {
    v.kind = VerdictKind::Imprimitive;
    v.route = Route::BlockSystem;
    v.divisors = alive;
    if (small) v.order = exact_order();
    return out;
  }

  if (repunit_free_even) {
    v.kind = VerdictKind::Symmetric;
    v.route = Route::RepunitFree;
    if (small) v.order = exact_order();
    return out;
  }

  if (n == 11 || n == 23) throw Error(ErrorKind::Internal, "q - 1 = 11 or 23 for a prime power q");

  // Affine candidate: nonidentity elements of AGL_1(n) fix at most one point.
  bool affine_excluded = !is_prime(n);
  for (std::size_t i = 0; i < class_perms.size() && !affine_excluded; ++i) {
    if (!class_perms[i].is_identity() && fixed_points(class_perms[i]) >= 2) affine_excluded = true;
  }

  for_each_literal(field, classes, [&](const Binomial& b) {
    if (affine_excluded) return false;
    const Perm g = perm_from_binomial(field, b);
    if (!g.is_identity() && fixed_points(g) >= 2) affine_excluded = true;
    return !affine_excluded;
  });

  class_perms.push_back(shift);
  v.jordan = jordan_search(class_perms, options.jordan_walk, options.seed ^ field.q());
  class_perms.pop_back();

  if (v.jordan) {
    // A primitive group with a p-cycle, p <= n - 3, contains A_n.
    v.route = Route::Jordan;
    if (n % 2 == 0) {
      v.kind = VerdictKind::Symmetric;  // the n-cycle is odd
    } else {
      for (std::size_t i = 0; i < class_perms.size() && !v.odd_generator; ++i) {
        if (parity(class_perms[i]) == Parity::Odd) v.odd_generator = classes[i].representative;
      }
      if (!v.odd_generator) {
        for_each_literal(field, classes, [&](const Binomial& b) {
          ++v.literals_scanned;
          if (parity(perm_from_binomial(field, b)) == Parity::Odd) v.odd_generator = b;
          return !v.odd_generator;
        });
      }
      v.kind = v.odd_generator ? VerdictKind::Symmetric : VerdictKind::Alternating;
    }
    if (small) v.order = exact_order();
    return out;
  }

  v.route = Route::GroupOrder;
  auto tag = [&] {
    if (!affine_excluded) {
      v.undetermined = UndeterminedCase::AffineCase;
    } else if (!reps.empty()) {
      v.undetermined = UndeterminedCase::ProjectiveCase;
      v.projective = reps.back();
    } else {
      v.undetermined = UndeterminedCase::ParityOnly;
    }
    v.kind = VerdictKind::Undetermined;
  };
  if (n > options.bsgs_max_degree) {
    tag();
    return out;
  }
  v.order = exact_order();
  const BigInt full = factorial(n);
  if (*v.order == full) {
    v.kind = VerdictKind::Symmetric;
  } else if (n % 2 == 1 && *v.order * 2 == full) {
    v.kind = VerdictKind::Alternating;
  } else {
    tag();
  }
  return out;
}

QuotientReport finish_quotient(u64 e, std::vector<Perm> images) {
  QuotientReport rep;
  rep.e = e;
  rep.has_e_cycle = std::any_of(images.begin(), images.end(), [](const Perm& p) { return is_full_cycle(p); });
  std::vector<Perm> with_shift = images;
  with_shift.push_back(Perm::shift(e, 1));
  rep.primitive = invariant_divisors(with_shift).primitive();
  rep.images = std::move(images);
  return rep;
}

Perm quotient_image(const Perm& g, u64 e) {
  std::vector<Perm::Point> img(e);
  for (u64 i = 0; i < e; ++i) img[i] = static_cast<Perm::Point>(g(static_cast<Perm::Point>(i)) % e);
  return Perm(std::move(img));
}

}  // namespace

std::vector<RepunitWitness> repunit_representations(u64 n) {
  std::vector<RepunitWitness> out;
  if (n < 3) return out;
  if (is_prime_power(n - 1)) out.push_back({n - 1, 2});
  const unsigned max_d = 1 + static_cast<unsigned>(std::bit_width(n) - 1);
  for (unsigned d = 3; d <= max_d; ++d) {
    // 1 + l + ... + l^(d-1) lies strictly between l^(d-1) and (l+1)^(d-1).
    const u64 root = iroot(n, d - 1);
    for (u64 ell = root > 1 ? root - 1 : 2; ell <= root + 1; ++ell) {
      if (ell < 2) continue;
      if (repunit(ell, d) == n && is_prime_power(ell)) out.push_back({ell, d});
    }
  }
  return out;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Trivial: return "Trivial";
    case VerdictKind::Symmetric: return "SymmetricGroup";
    case VerdictKind::Alternating: return "AlternatingGroup";
    case VerdictKind::Imprimitive: return "Imprimitive";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(UndeterminedCase c) {
  switch (c) {
    case UndeterminedCase::None: return "None";
    case UndeterminedCase::AffineCase: return "AffineCase";
    case UndeterminedCase::ProjectiveCase: return "ProjectiveCase";
    case UndeterminedCase::ParityOnly: return "ParityOnly";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::NoGenerators: return "NoGenerators";
    case Route::BlockSystem: return "BlockSystem";
    case Route::RepunitFree: return "RepunitFree";
    case Route::Jordan: return "Jordan";
    case Route::GroupOrder: return "GroupOrder";
  }
  return "?";
}

std::string describe(const Verdict& v) {
  std::string s(to_string(v.kind));
  if (v.kind == VerdictKind::Imprimitive) {
    s += "(";
    for (std::size_t i = 0; i < v.divisors.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v.divisors[i]);
    }
    s += ")";
  } else if (v.kind == VerdictKind::Undetermined) {
    s += "(";
    s += to_string(v.undetermined);
    if (v.projective) s += "," + std::to_string(v.projective->ell) + "," + std::to_string(v.projective->d);
    s += ")";
  }
  return s;
}

Verdict decide_group(const FieldCtx& field, const DecideOptions& options) {
  return decide_impl(field, options).verdict;
}

Verdict decide_group(u64 q, const DecideOptions& options) {
  return decide_group(build_field_for(q, options.field_ceiling), options);
}

u64 r_of_classes(std::span<const BinomialClass> classes) {
  u64 r = 0;
  for (const BinomialClass& c : classes) r = std::gcd(r, c.s);
  return r;
}

u64 r_of_q(const FieldCtx& field) { return r_of_classes(permutation_classes(field)); }

BigInt wanlidl_order(u64 q, u64 d) {
  if (q < 2 || d == 0 || (q - 1) % d != 0) {
    throw Error(ErrorKind::BadDivisor, std::to_string(d) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  const u64 e = (q - 1) / d;
  BigInt out = euler_phi(d);
  out *= boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(e));
  out *= factorial(e);
  return out;
}

QuotientReport quotient_action(std::span<const Perm> gens, u64 e) {
  if (gens.empty()) throw Error(ErrorKind::MissingScalar, "empty generator list");
  std::vector<Perm> images;
  for (const Perm& g : gens) {
    if (auto w = mod_class_witness(g, e)) {
      throw Error(ErrorKind::NotBlockRespecting,
                  "points " + std::to_string(w->i) + " and " + std::to_string(w->j) +
                      " share a class mod " + std::to_string(e) + " but their images do not");
    }
    images.push_back(quotient_image(g, e));
  }
  return finish_quotient(e, std::move(images));
}

PrimReport verify_prim_pipeline(u64 r, u64 ceiling) {
  if (!is_prime_power(r) || r % 3 != 2 || (r % 8 != 3 && r % 8 != 5)) {
    throw Error(ErrorKind::BadCongruence,
                "r=" + std::to_string(r) + " must be a prime power with r = 2 mod 3 and r = +-3 mod 8");
  }
  PrimReport rep;
  rep.r = r;
  rep.q = r * r;
  const FieldCtx field = build_field_for(rep.q, ceiling);
  const u64 n = field.order();
  std::vector<Perm> gens{scalar_cycle(field)};

  auto survivors = [&] {
    std::vector<u64> out;
    for (u64 d : invariant_divisors(gens).divisors_preserved) {
      if (d < n) out.push_back(d);
    }
    return out;
  };
  auto add = [&](std::optional<Binomial> b, PrimStage& stage) {
    if (!b) return;
    gens.push_back(perm_from_binomial(field, *b));
    ++stage.generators;
  };

  for (u64 i = 0; i < n; ++i) add(family_additive(field, r, field.from_log(i)), rep.stage1);
  rep.stage1.survivors = survivors();
  for (u64 i = 0; i < n; ++i) add(family_tz(field, r, field.from_log(i)), rep.stage2);
  rep.stage2.survivors = survivors();
  for (Elem a : coset_family_values(field, 8)) add(make_binomial(field, a, 1, 1 + n / 8), rep.stage3);
  rep.stage3_incomplete = rep.stage3.generators == 0;
  rep.stage3.survivors = survivors();

  rep.stage1_divides = std::all_of(rep.stage1.survivors.begin(), rep.stage1.survivors.end(),
                                   [&](u64 d) { return (r - 1) % d == 0; });
  rep.stage2_divides = std::all_of(rep.stage2.survivors.begin(), rep.stage2.survivors.end(),
                                   [](u64 d) { return 2 % d == 0; });
  return rep;
}

MzReport mz_scan(u64 p_max, u64 p_min) {
  MzReport rep;
  for (u64 p = std::max<u64>(p_min, 2); p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    const FieldCtx field = build_field(p, 1);
    MzEntry entry;
    entry.p = p;
    entry.threshold = static_cast<double>(p) / (2.0 * std::log(static_cast<double>(p)));
    for (const BinomialClass& c : permutation_classes(field)) {
      if (entry.min_gcd == 0 || c.s < entry.min_gcd) entry.min_gcd = c.s;
    }
    entry.holds = entry.min_gcd == 0 || static_cast<double>(entry.min_gcd) > entry.threshold;
    if (!entry.holds) rep.violations.push_back(p);
    rep.entries.push_back(entry);
  }
  return rep;
}

bool gcd_lcm_identity_check(u64 q, u64 c_num, u64 c_den) {
  if (c_num == 0 || c_den == 0) throw Error(ErrorKind::BadDivisor, "c must be a positive rational");
  if (!is_prime_power(q)) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const u64 n = q - 1;
  const double bound = std::log(static_cast<double>(q)) * static_cast<double>(c_den) / static_cast<double>(c_num);
  u64 g = 0;
  BigInt l = 1;
  for (u64 d : divisors(n)) {
    if (static_cast<double>(d) > bound) continue;
    g = std::gcd(g, n / d);
    l = boost::multiprecision::lcm(l, BigInt(d));
  }
  return (g == 1) == (l == n);
}

SurveyRecord analyze(u64 q, const DecideOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SurveyRecord rec;
  const FieldCtx field = build_field_for(q, options.field_ceiling);
  rec.q = q;
  rec.p = field.p();
  rec.e = field.spec().e;
  rec.modulus = field.spec().modulus;
  rec.generator = field.spec().generator;

  Decided dec = decide_impl(field, options);
  rec.verdict = std::move(dec.verdict);
  rec.r_of_q = r_of_classes(dec.classes);
  const u64 n = field.order();
  if (rec.verdict.kind != VerdictKind::Trivial) {
    rec.surviving_divisors.push_back(1);
    for (u64 d : rec.verdict.divisors) rec.surviving_divisors.push_back(d);
    if (n != 1) rec.surviving_divisors.push_back(n);
  }
  if (rec.verdict.kind == VerdictKind::Imprimitive) {
    // Blocks are the cosets of mu_r(q), or of the largest surviving mu_d when r(q) = 1.
    const u64 d = rec.r_of_q > 1 ? rec.r_of_q : rec.verdict.divisors.back();
    const u64 e = n / d;
    std::vector<Perm> images;
    for (const BinomialClass& c : dec.classes) {
      images.push_back(quotient_image(perm_from_binomial(field, c.representative), e));
    }
    images.push_back(Perm::shift(e, 1));
    rec.quotient = finish_quotient(e, std::move(images));
    rec.quotient->images.clear();
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace binomgroup
