#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "binomgroup/classify.hpp"

namespace binomgroup::cli {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const SurveyRecord& rec);
// Throws std::runtime_error (or a json exception) on malformed input or a schema mismatch.
SurveyRecord record_from_json(const nlohmann::json& j);

std::string to_jsonl(const SurveyRecord& rec);
SurveyRecord parse_jsonl(const std::string& line);

// Fixed column order: q,p,e,verdict,gens,r_of_q,divisors,order,ms
std::string csv_header();
std::string to_csv(const SurveyRecord& rec);

nlohmann::json to_json(const Binomial& b);

}  // namespace binomgroup::cli
