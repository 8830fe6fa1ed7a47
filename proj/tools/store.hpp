#pragma once

#include <filesystem>
#include <map>

#include "binomgroup/classify.hpp"

namespace binomgroup::cli {

// Append-only JSON Lines store of survey records, one per q.
// Later lines win if a file was concatenated by hand.
class Store {
 public:
  explicit Store(std::filesystem::path dir);

  // $BINOMGROUP_CACHE, else $HOME/.cache/binomgroup, else ./.binomgroup
  static std::filesystem::path default_dir();

  const std::filesystem::path& file() const { return file_; }
  const std::map<u64, SurveyRecord>& records() const { return records_; }
  bool contains(u64 q) const { return records_.count(q) != 0; }

  void append(const SurveyRecord& rec);
  // Rewrites the file with the current records, via a temporary file and rename.
  void compact();
  // Replace or add without touching the file; call compact() afterwards.
  void put(const SurveyRecord& rec) { records_[rec.q] = rec; }

 private:
  std::filesystem::path file_;
  std::map<u64, SurveyRecord> records_;
};

}  // namespace binomgroup::cli
