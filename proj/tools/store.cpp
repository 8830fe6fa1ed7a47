#include "store.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "record.hpp"

namespace binomgroup::cli {

namespace fs = std::filesystem;

Store::Store(fs::path dir) : file_(std::move(dir) / "records.jsonl") {
  fs::create_directories(file_.parent_path());
  std::ifstream in(file_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      SurveyRecord rec = parse_jsonl(line);
      records_[rec.q] = std::move(rec);
    } catch (const std::exception& e) {
      throw std::runtime_error(file_.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

fs::path Store::default_dir() {
  if (const char* env = std::getenv("BINOMGROUP_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "binomgroup";
  }
  return ".binomgroup";
}

void Store::append(const SurveyRecord& rec) {
  std::ofstream out(file_, std::ios::app);
  out << to_jsonl(rec) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot append to " + file_.string());
  records_[rec.q] = rec;
}

void Store::compact() {
  fs::path tmp = file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [q, rec] : records_) out << to_jsonl(rec) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, file_);
}

}  // namespace binomgroup::cli
