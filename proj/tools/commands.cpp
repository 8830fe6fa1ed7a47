#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomgroup/error.hpp"
#include "binomgroup/sieve.hpp"
#include "record.hpp"
#include "store.hpp"

namespace binomgroup::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string out_path;
  std::string format = "jsonl";
  unsigned jobs = 0;
  bool force = false;
  std::optional<u64> expect;
  u64 ceiling = FieldCtx::kDefaultCeiling;
};

struct Context {
  Flags flags;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

bool csv(const Context& ctx) { return ctx.flags.format == "csv"; }

void require_jsonl(const Context& ctx, const char* command) {
  if (csv(ctx)) throw UsageError(std::string(command) + " only writes jsonl; --format csv applies to analyze, survey, vr18 and mzscan");
}

void require_field(u64 q, const Context& ctx) {
  if (q < 3 || !is_prime_power(q)) throw UsageError("q=" + std::to_string(q) + " must be a prime power >= 3");
  if (q > ctx.flags.ceiling) {
    throw UsageError("q=" + std::to_string(q) + " exceeds --ceiling " + std::to_string(ctx.flags.ceiling));
  }
}

DecideOptions decide_options(const Context& ctx) {
  DecideOptions o;
  o.field_ceiling = ctx.flags.ceiling;
  return o;
}

void emit_line(Context& ctx, const json& j) { *ctx.out << j.dump() << '\n'; }

void emit_records(Context& ctx, const std::vector<SurveyRecord>& recs) {
  if (csv(ctx)) *ctx.out << csv_header() << '\n';
  for (const SurveyRecord& r : recs) *ctx.out << (csv(ctx) ? to_csv(r) : to_jsonl(r)) << '\n';
}

// Cached records are reused unless --force; new ones are appended to the store in q order.
std::vector<SurveyRecord> stored_survey(Context& ctx, u64 q_min, u64 q_max) {
  Store store(Store::default_dir());
  SurveyOptions opts;
  opts.jobs = ctx.flags.jobs;
  opts.decide = decide_options(ctx);
  if (!ctx.flags.force) opts.skip = [&](u64 q) { return store.contains(q); };
  std::size_t fresh = 0;
  opts.on_record = [&](const SurveyRecord& r) {
    ++fresh;
    if (ctx.flags.force) {
      store.put(r);
    } else {
      store.append(r);
    }
  };
  survey(q_min, q_max, opts);
  if (ctx.flags.force) store.compact();

  std::vector<SurveyRecord> out;
  for (auto it = store.records().lower_bound(q_min); it != store.records().end() && it->first <= q_max; ++it) {
    out.push_back(it->second);
  }
  *ctx.err << "survey " << q_min << ".." << q_max << ": " << out.size() << " records (" << fresh
           << " computed, " << out.size() - fresh << " from " << store.file().string() << ")\n";
  return out;
}

void summarize(Context& ctx, const std::vector<SurveyRecord>& recs) {
  std::map<std::string, std::size_t> tally;
  for (const SurveyRecord& r : recs) ++tally[std::string(to_string(r.verdict.kind))];
  for (const auto& [kind, count] : tally) *ctx.err << "  " << kind << ": " << count << '\n';
}

int cmd_analyze(Context& ctx, u64 q) {
  require_field(q, ctx);
  const SurveyRecord rec = analyze(q, decide_options(ctx));
  emit_records(ctx, {rec});
  *ctx.err << "q=" << q << ": " << describe(rec.verdict) << " via " << to_string(rec.verdict.route) << ", "
           << rec.verdict.generator_classes << " generator classes, r(q)=" << rec.r_of_q << '\n';
  return kOk;
}

int cmd_survey(Context& ctx, u64 q_min, u64 q_max) {
  if (q_min > q_max) throw UsageError("empty range: qmin > qmax");
  if (q_max > ctx.flags.ceiling) throw UsageError("qmax exceeds --ceiling");
  const auto recs = stored_survey(ctx, q_min, q_max);
  emit_records(ctx, recs);
  summarize(ctx, recs);
  return kOk;
}

int cmd_vr18(Context& ctx) {
  const auto recs = stored_survey(ctx, 3, 4999);
  std::vector<u64> hits;
  for (const SurveyRecord& r : recs) {
    if (r.verdict.kind == VerdictKind::Symmetric) hits.push_back(r.q);
  }
  std::size_t undetermined = 0;
  for (const SurveyRecord& r : recs) undetermined += r.verdict.kind == VerdictKind::Undetermined;
  if (csv(ctx)) {
    *ctx.out << "q\n";
    for (u64 q : hits) *ctx.out << q << '\n';
  } else {
    emit_line(ctx, json{{"schema", kSchemaVersion}, {"command", "vr18"}, {"count", hits.size()},
                        {"undetermined", undetermined}, {"q", hits}});
  }
  *ctx.err << hits.size() << " prime powers q < 5000 with G(q) = S_{q-1}";
  if (undetermined) *ctx.err << " (" << undetermined << " undetermined)";
  *ctx.err << '\n';
  if (ctx.flags.expect && (*ctx.flags.expect != hits.size() || undetermined != 0)) {
    *ctx.err << "expected " << *ctx.flags.expect << '\n';
    return kAcceptance;
  }
  return kOk;
}

int cmd_families(Context& ctx, u64 q) {
  require_jsonl(ctx, "families");
  require_field(q, ctx);
  const FieldCtx field = build_field_for(q, ctx.flags.ceiling);
  const u64 n = field.order();
  json additive = json::array();
  for (unsigned j = 1; j < field.spec().e; ++j) {
    if (field.spec().e % j != 0) continue;
    const u64 r = *checked_pow(field.p(), j);
    u64 count = 0;
    bool all_permute = true;
    for (u64 i = 0; i < n; ++i) {
      if (auto b = family_additive(field, r, field.from_log(i))) {
        ++count;
        all_permute = all_permute && is_perm_bruteforce(field, b->a, field.one(), b->m, b->n);
      }
    }
    additive.push_back({{"r", r}, {"count", count}, {"expected", n - n / (r - 1)}, {"all_permute", all_permute}});
  }
  json tz = nullptr;
  const u64 r = isqrt(q);
  if (r * r == q && r % 3 == 2 && r > 2) {
    u64 count = 0;
    bool all_permute = true;
    for (u64 i = 0; i < n; ++i) {
      if (auto b = family_tz(field, r, field.from_log(i))) {
        ++count;
        all_permute = all_permute && is_perm_bruteforce(field, b->a, field.one(), b->m, b->n);
      }
    }
    tz = {{"r", r}, {"count", count}, {"expected", 2 * (r - 1)}, {"all_permute", all_permute}};
  }
  json coset = json::array();
  for (u64 s : divisors(n)) {
    if (s >= 2) coset.push_back({{"s", s}, {"count", count_N(field, s)}});
  }
  emit_line(ctx, json{{"schema", kSchemaVersion}, {"command", "families"}, {"q", q},
                      {"additive", additive}, {"tz", tz}, {"coset", coset}});
  *ctx.err << "families over F_" << q << ": " << additive.size() << " additive, " << (tz.is_null() ? 0 : 1)
           << " x^(r+2)+ax, " << coset.size() << " coset divisors\n";
  return kOk;
}

int cmd_sieve(Context& ctx, u64 bound) {
  require_jsonl(ctx, "sieve");
  if (bound > kMaxSieveBound) throw UsageError("N must be at most 10^14");
  const SieveReport rep = qualifying_primes(bound);
  const RepunitTail tail = repunit_tail_count(bound);
  const bool agrees = qualifying_primes_filter(bound) == rep.qualifying;
  emit_line(ctx, json{{"schema", kSchemaVersion},
                      {"command", "sieve"},
                      {"N", bound},
                      {"sqrt_N", rep.root},
                      {"congruent", rep.congruent},
                      {"d2_excluded", rep.d2_excluded},
                      {"repunit_excluded", rep.repunit_excluded},
                      {"odd_d_witnesses", rep.odd_d_witnesses},
                      {"qualifying_count", rep.qualifying.size()},
                      {"qualifying", rep.qualifying},
                      {"expected", rep.expected},
                      {"ratio", rep.ratio},
                      {"flagged", rep.flagged},
                      {"implementations_agree", agrees},
                      {"repunit_tail", {{"count", tail.count}, {"bound", tail.bound}, {"within", tail.within}}}});
  *ctx.err << rep.qualifying.size() << " qualifying primes r <= " << rep.root << ", expected " << rep.expected
           << " (ratio " << rep.ratio << (rep.flagged ? ", FLAGGED" : "") << ")\n";
  return agrees ? kOk : kEngine;
}

int cmd_mzscan(Context& ctx, u64 p_max) {
  if (p_max > ctx.flags.ceiling) throw UsageError("pmax exceeds --ceiling");
  const MzReport rep = mz_scan(p_max);
  if (csv(ctx)) *ctx.out << "p,min_gcd,threshold,holds\n";
  for (const MzEntry& e : rep.entries) {
    if (csv(ctx)) {
      *ctx.out << e.p << ',' << e.min_gcd << ',' << e.threshold << ',' << (e.holds ? "true" : "false") << '\n';
    } else {
      emit_line(ctx, json{{"schema", kSchemaVersion}, {"p", e.p},
                          {"min_gcd", e.min_gcd == 0 ? json(nullptr) : json(e.min_gcd)},
                          {"threshold", e.threshold}, {"holds", e.holds}});
    }
  }
  *ctx.err << rep.entries.size() << " primes scanned, " << rep.violations.size() << " violations\n";
  return kOk;
}

int cmd_keyprop(Context& ctx, u64 q, u64 d, u64 k) {
  require_jsonl(ctx, "keyprop");
  require_field(q, ctx);
  const u64 n = q - 1;
  if (d == 0 || k == 0 || n % d != 0 || n % k != 0) throw UsageError("d and k must divide q - 1");
  if (k % d == 0) throw UsageError("d must not divide k");
  const FieldCtx field = build_field_for(q, ctx.flags.ceiling);
  const auto hits = keyprop_hits(field, d, k);
  json list = json::array();
  for (const KeypropHit& h : hits) {
    list.push_back({{"a_log", h.a.log()}, {"a_encoding", field.encoding(h.a)}, {"coset", h.coset}});
  }
  emit_line(ctx, json{{"schema", kSchemaVersion}, {"command", "keyprop"}, {"q", q}, {"d", d}, {"k", k},
                      {"count", hits.size()}, {"bound_holds", hits.size() <= d}, {"hits", list}});
  *ctx.err << hits.size() << " of " << n << " values of a send mu_" << d << " into one coset (bound " << d << ")\n";
  return kOk;
}

int cmd_prim(Context& ctx, u64 r) {
  require_jsonl(ctx, "prim");
  if (!is_prime_power(r) || r % 3 != 2 || (r % 8 != 3 && r % 8 != 5)) {
    throw UsageError("r must be a prime power with r = 2 mod 3 and r = +-3 mod 8");
  }
  if (r * r > ctx.flags.ceiling) throw UsageError("r^2 exceeds --ceiling");
  const PrimReport rep = verify_prim_pipeline(r, ctx.flags.ceiling);
  auto stage = [](int i, const PrimStage& s) {
    return json{{"stage", i}, {"generators", s.generators}, {"survivors", s.survivors}};
  };
  emit_line(ctx, json{{"schema", kSchemaVersion},
                      {"command", "prim"},
                      {"r", r},
                      {"q", rep.q},
                      {"stages", {stage(1, rep.stage1), stage(2, rep.stage2), stage(3, rep.stage3)}},
                      {"stage1_divides_r_minus_1", rep.stage1_divides},
                      {"stage2_divides_2", rep.stage2_divides},
                      {"stage3_incomplete", rep.stage3_incomplete},
                      {"success", rep.success()}});
  if (rep.stage3_incomplete) *ctx.err << "StageIncomplete: no x(a + x^((q-1)/8)) permutes F_" << rep.q << '\n';
  *ctx.err << "r=" << r << ": final survivors";
  for (u64 d : rep.stage3.survivors) *ctx.err << ' ' << d;
  *ctx.err << (rep.success() ? " (primitive)" : " (not primitive)") << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  CLI::App app{"Groups generated by permutation binomials over finite fields", "binomgroup"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags& f = ctx.flags;
  app.add_option("--out", f.out_path, "Write machine-readable output to this file");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--jobs", f.jobs, "Worker threads (default: all cores)");
  app.add_flag("--force", f.force, "Recompute cached survey records");
  app.add_option("--expect", f.expect, "Expected vr18 count; mismatch exits with 3");
  app.add_option("--ceiling", f.ceiling, "Largest field size q")->check(CLI::Range(u64{3}, u64{1} << 31));

  u64 a = 0, b = 0, c = 0;
  std::function<int()> action;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide G(q) for one prime power");
  analyze_cmd->add_option("q", a)->required();
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(ctx, a); }; });
  auto* survey_cmd = app.add_subcommand("survey", "Decide G(q) for every prime power in a range");
  survey_cmd->add_option("qmin", a)->required();
  survey_cmd->add_option("qmax", b)->required();
  survey_cmd->callback([&] { action = [&] { return cmd_survey(ctx, a, b); }; });
  app.add_subcommand("vr18", "Count q < 5000 with G(q) symmetric")->callback([&] {
    action = [&] { return cmd_vr18(ctx); };
  });
  auto* fam = app.add_subcommand("families", "Count the explicit binomial families over F_q");
  fam->add_option("q", a)->required();
  fam->callback([&] { action = [&] { return cmd_families(ctx, a); }; });
  auto* sv = app.add_subcommand("sieve", "Congruence sieve for primes r <= sqrt(N)");
  sv->add_option("N", a)->required();
  sv->callback([&] { action = [&] { return cmd_sieve(ctx, a); }; });
  auto* mz = app.add_subcommand("mzscan", "Minimum gap gcd over permutation binomials of F_p");
  mz->add_option("pmax", a)->required();
  mz->callback([&] { action = [&] { return cmd_mzscan(ctx, a); }; });
  auto* kp = app.add_subcommand("keyprop", "Values a sending mu_d into one coset under x^(k+1) + a x");
  kp->add_option("q", a)->required();
  kp->add_option("d", b)->required();
  kp->add_option("k", c)->required();
  kp->callback([&] { action = [&] { return cmd_keyprop(ctx, a, b, c); }; });
  auto* pr = app.add_subcommand("prim", "Replay the primitivity argument over F_{r^2}");
  pr->add_option("r", a)->required();
  pr->callback([&] { action = [&] { return cmd_prim(ctx, a); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  ctx.out = &out;
  ctx.err = &err;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::trunc);
    if (!file) {
      err << "cannot open " << f.out_path << '\n';
      return kUsage;
    }
    ctx.out = &file;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kEngine;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEngine;
  }
}

}  // namespace binomgroup::cli
