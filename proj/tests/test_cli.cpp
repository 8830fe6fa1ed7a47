#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "binomgroup/arith.hpp"
#include "commands.hpp"
#include "record.hpp"
#include "store.hpp"

using namespace binomgroup;
using namespace binomgroup::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "binomgroup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

// Each test gets an empty store directory through BINOMGROUP_CACHE.
class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("binomgroup-test-" + std::to_string(rd()));
    fs::create_directories(dir_);
    setenv("BINOMGROUP_CACHE", dir_.c_str(), 1);
  }
  void TearDown() override {
    unsetenv("BINOMGROUP_CACHE");
    fs::remove_all(dir_);
  }
  fs::path dir_;
};

SurveyRecord strip_time(SurveyRecord r) {
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_F(Cli, AnalyzeEight) {
  const Result r = invoke({"analyze", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"]["kind"], "Trivial");
  EXPECT_EQ(j["generator_class_count"], 0);
}

TEST_F(Cli, KeypropThirteen) {
  const Result r = invoke({"keyprop", "13", "4", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_LE(j["count"].get<int>(), 4);
  EXPECT_EQ(j["hits"].size(), j["count"].get<std::size_t>());
  EXPECT_TRUE(j["bound_holds"].get<bool>());
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"analyze", "12"}).code, 1);
  EXPECT_EQ(invoke({"analyze"}).code, 1);
  EXPECT_EQ(invoke({"--format", "xml", "analyze", "7"}).code, 1);
  EXPECT_EQ(invoke({"--ceiling", "100", "analyze", "101"}).code, 1);
  EXPECT_EQ(invoke({"keyprop", "13", "4", "8"}).code, 1);  // d | k
  EXPECT_EQ(invoke({"prim", "7"}).code, 1);
  EXPECT_EQ(invoke({"sieve", "1000000000000000"}).code, 1);
  EXPECT_EQ(invoke({"--format", "csv", "keyprop", "13", "4", "3"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, RecordRoundTrip) {
  for (u64 q : {7u, 8u, 13u, 25u, 27u, 31u, 49u, 64u, 81u, 121u, 128u, 211u}) {
    const SurveyRecord rec = analyze(q);
    const SurveyRecord back = parse_jsonl(to_jsonl(rec));
    EXPECT_EQ(back, rec) << q;
    EXPECT_EQ(to_jsonl(back), to_jsonl(rec));
  }
  EXPECT_ANY_THROW(parse_jsonl(R"({"schema":2,"q":7})"));
  EXPECT_ANY_THROW(parse_jsonl("not json"));
}

// analyze on the q of a stored record reproduces every field except the timing.
TEST_F(Cli, ReplayIsDeterministic) {
  ASSERT_EQ(invoke({"--jobs", "2", "survey", "3", "130"}).code, 0);
  const Store store(Store::default_dir());
  ASSERT_FALSE(store.records().empty());
  for (const auto& [q, rec] : store.records()) {
    const Result r = invoke({"analyze", std::to_string(q)});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(strip_time(parse_jsonl(lines(r.out).at(0))), strip_time(rec)) << q;
  }
}

TEST_F(Cli, StoreSkipsCachedUnlessForced) {
  const Result first = invoke({"survey", "3", "50"});
  ASSERT_EQ(first.code, 0);
  EXPECT_NE(first.err.find("computed, 0 from"), std::string::npos) << first.err;
  const fs::path file = dir_ / "records.jsonl";
  const auto size = fs::file_size(file);

  const Result second = invoke({"survey", "3", "50"});
  EXPECT_NE(second.err.find("0 computed"), std::string::npos) << second.err;
  EXPECT_EQ(fs::file_size(file), size);
  EXPECT_EQ(lines(second.out).size(), lines(first.out).size());

  const Result third = invoke({"survey", "3", "60"});
  EXPECT_NE(third.err.find("2 computed"), std::string::npos) << third.err;  // 53, 59

  const Result forced = invoke({"--force", "survey", "3", "50"});
  EXPECT_NE(forced.err.find("0 from"), std::string::npos) << forced.err;
  std::ifstream in(file);
  std::set<u64> seen;
  std::size_t n = 0;
  for (std::string l; std::getline(in, l);) {
    ++n;
    seen.insert(parse_jsonl(l).q);
  }
  EXPECT_EQ(seen.size(), n);  // no duplicate q after compaction
  EXPECT_EQ(n, prime_powers_in(3, 60).size());
}

TEST_F(Cli, CsvOutput) {
  const Result r = invoke({"--format", "csv", "survey", "3", "9"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "q,p,e,verdict,gens,r_of_q,divisors,order,ms");
  EXPECT_EQ(ls[1].rfind("3,3,1,Trivial,0,0,", 0), 0u) << ls[1];
}

TEST_F(Cli, OutFlagWritesFile) {
  const fs::path out = dir_ / "out.jsonl";
  const Result r = invoke({"--out", out.string(), "analyze", "9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(parse_jsonl(line).q, 9u);
}

// A store seeded with placeholder records lets vr18 run without the full survey.
TEST_F(Cli, Vr18ExpectMismatchExitsThree) {
  {
    Store store(Store::default_dir());
    for (u64 q : prime_powers_in(3, 4999)) {
      SurveyRecord r;
      r.q = q;
      r.verdict.kind = q == 27 ? VerdictKind::Symmetric : VerdictKind::Trivial;
      store.put(r);
    }
    store.compact();
  }
  const Result ok = invoke({"--expect", "1", "vr18"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(lines(ok.out).at(0));
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["q"], nlohmann::json::array({27}));
  EXPECT_EQ(invoke({"--expect", "18", "vr18"}).code, 3);
  EXPECT_EQ(invoke({"vr18"}).code, 0);
}

TEST_F(Cli, OtherCommands) {
  const Result fam = invoke({"families", "25"});
  ASSERT_EQ(fam.code, 0);
  const auto f = nlohmann::json::parse(lines(fam.out).at(0));
  EXPECT_EQ(f["tz"]["count"], 8);
  EXPECT_EQ(f["additive"][0]["count"], 18);

  const Result sv = invoke({"sieve", "10000"});
  ASSERT_EQ(sv.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(lines(sv.out).at(0))["implementations_agree"].get<bool>());

  const Result mz = invoke({"mzscan", "30"});
  ASSERT_EQ(mz.code, 0);
  EXPECT_EQ(lines(mz.out).size(), 9u);  // odd primes 3..29
}
