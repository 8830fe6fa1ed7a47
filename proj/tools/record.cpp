#include "record.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace binomgroup::cli {
namespace {

using nlohmann::json;

template <typename E, std::size_t N>
E enum_from(const std::string& s, const E (&all)[N]) {
  for (E e : all) {
    if (to_string(e) == s) return e;
  }
  throw std::runtime_error("unknown tag '" + s + "'");
}

constexpr VerdictKind kKinds[] = {VerdictKind::Trivial, VerdictKind::Symmetric, VerdictKind::Alternating,
                                  VerdictKind::Imprimitive, VerdictKind::Undetermined};
constexpr UndeterminedCase kCases[] = {UndeterminedCase::None, UndeterminedCase::AffineCase,
                                       UndeterminedCase::ProjectiveCase, UndeterminedCase::ParityOnly};
constexpr Route kRoutes[] = {Route::NoGenerators, Route::BlockSystem, Route::RepunitFree, Route::Jordan,
                             Route::GroupOrder};

// k, s, d, t are recomputed from q on the way back in.
Binomial binomial_from(const json& j, u64 q) {
  Binomial b;
  b.a = Elem::from_log(j.at("a_log").get<std::uint32_t>());
  b.m = j.at("m").get<u64>();
  b.n = j.at("n").get<u64>();
  b.k = b.n - b.m;
  b.s = std::gcd(b.k, q - 1);
  b.d = (q - 1) / b.s;
  b.t = b.k / b.s;
  return b;
}

std::string join(const std::vector<u64>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

json to_json(const Binomial& b) { return json{{"a_log", b.a.log()}, {"m", b.m}, {"n", b.n}}; }

json to_json(const SurveyRecord& rec) {
  const Verdict& v = rec.verdict;
  json verdict{{"kind", to_string(v.kind)}, {"route", to_string(v.route)}};
  if (v.kind == VerdictKind::Imprimitive) verdict["divisors"] = v.divisors;
  if (v.kind == VerdictKind::Undetermined) {
    verdict["case"] = to_string(v.undetermined);
    if (v.projective) verdict["projective"] = {{"ell", v.projective->ell}, {"dim", v.projective->d}};
  }

  json j{
      {"schema", kSchemaVersion},
      {"q", rec.q},
      {"p", rec.p},
      {"e", rec.e},
      {"verdict", verdict},
      {"generator_class_count", v.generator_classes},
      {"scalar_adjoined", v.scalar_adjoined},
      {"r_of_q", rec.r_of_q},
      {"surviving_divisors", rec.surviving_divisors},
      {"bsgs_order", v.order ? json(to_decimal(*v.order)) : json(nullptr)},
      {"jordan", v.jordan ? json{{"word", v.jordan->word}, {"prime", v.jordan->prime}} : json(nullptr)},
      {"odd_generator", v.odd_generator ? to_json(*v.odd_generator) : json(nullptr)},
      {"literals_scanned", v.literals_scanned},
      {"quotient", rec.quotient ? json{{"e", rec.quotient->e},
                                       {"has_e_cycle", rec.quotient->has_e_cycle},
                                       {"primitive", rec.quotient->primitive}}
                                : json(nullptr)},
      {"elapsed_ms", rec.elapsed_ms},
      {"engine_version", rec.engine_version},
      {"field", {{"modulus", rec.modulus}, {"generator", rec.generator}}},
  };
  return j;
}

SurveyRecord record_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw std::runtime_error("unsupported record schema " + j.at("schema").dump());
  }
  SurveyRecord rec;
  rec.q = j.at("q").get<u64>();
  rec.p = j.at("p").get<u64>();
  rec.e = j.at("e").get<unsigned>();

  Verdict& v = rec.verdict;
  const json& jv = j.at("verdict");
  v.kind = enum_from(jv.at("kind").get<std::string>(), kKinds);
  v.route = enum_from(jv.at("route").get<std::string>(), kRoutes);
  if (jv.contains("divisors")) v.divisors = jv.at("divisors").get<std::vector<u64>>();
  if (jv.contains("case")) v.undetermined = enum_from(jv.at("case").get<std::string>(), kCases);
  if (jv.contains("projective")) {
    v.projective = RepunitWitness{jv["projective"].at("ell").get<u64>(), jv["projective"].at("dim").get<unsigned>()};
  }
  v.generator_classes = j.at("generator_class_count").get<std::size_t>();
  v.scalar_adjoined = j.at("scalar_adjoined").get<bool>();
  if (!j.at("bsgs_order").is_null()) v.order = BigInt(j["bsgs_order"].get<std::string>());
  if (!j.at("jordan").is_null()) {
    v.jordan = JordanWitness{j["jordan"].at("word").get<std::vector<std::uint32_t>>(),
                             j["jordan"].at("prime").get<u64>()};
  }
  if (!j.at("odd_generator").is_null()) v.odd_generator = binomial_from(j["odd_generator"], rec.q);
  v.literals_scanned = j.at("literals_scanned").get<std::size_t>();

  rec.r_of_q = j.at("r_of_q").get<u64>();
  rec.surviving_divisors = j.at("surviving_divisors").get<std::vector<u64>>();
  if (!j.at("quotient").is_null()) {
    QuotientReport qr;
    qr.e = j["quotient"].at("e").get<u64>();
    qr.has_e_cycle = j["quotient"].at("has_e_cycle").get<bool>();
    qr.primitive = j["quotient"].at("primitive").get<bool>();
    rec.quotient = qr;
  }
  rec.elapsed_ms = j.at("elapsed_ms").get<double>();
  rec.engine_version = j.at("engine_version").get<std::string>();
  rec.modulus = j.at("field").at("modulus").get<std::vector<std::uint32_t>>();
  rec.generator = j.at("field").at("generator").get<std::uint32_t>();
  return rec;
}

std::string to_jsonl(const SurveyRecord& rec) { return to_json(rec).dump(); }

SurveyRecord parse_jsonl(const std::string& line) { return record_from_json(json::parse(line)); }

std::string csv_header() { return "q,p,e,verdict,gens,r_of_q,divisors,order,ms"; }

std::string to_csv(const SurveyRecord& rec) {
  const Verdict& v = rec.verdict;
  std::string verdict(to_string(v.kind));
  if (v.kind == VerdictKind::Undetermined) verdict += ":" + std::string(to_string(v.undetermined));
  std::ostringstream out;
  out << rec.q << ',' << rec.p << ',' << rec.e << ',' << verdict << ',' << v.generator_classes << ','
      << rec.r_of_q << ',' << join(rec.surviving_divisors, ' ') << ',' << (v.order ? to_decimal(*v.order) : "")
      << ',' << rec.elapsed_ms;
  return out.str();
}

}  // namespace binomgroup::cli
