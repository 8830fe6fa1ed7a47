#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "binomgroup/classify.hpp"

namespace binomgroup {

std::vector<SurveyRecord> survey(u64 q_min, u64 q_max, const SurveyOptions& options) {
  std::vector<u64> qs;
  for (u64 q : prime_powers_in(std::max<u64>(q_min, 3), q_max)) {
    if (!options.skip || !options.skip(q)) qs.push_back(q);
  }
  std::vector<std::optional<SurveyRecord>> slots(qs.size());
  std::vector<std::exception_ptr> errors(qs.size());

  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(qs.size(), 1)));

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::vector<bool> done(qs.size(), false);

  auto work = [&] {
    for (std::size_t i = next++; i < qs.size(); i = next++) {
      std::optional<SurveyRecord> rec;
      std::exception_ptr err;
      try {
        rec = analyze(qs[i], options.decide);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(rec);
        errors[i] = err;
        done[i] = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  if (jobs > 1) {
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }

  std::vector<SurveyRecord> out;
  out.reserve(qs.size());
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (pool.empty()) {
      try {
        slots[i] = analyze(qs[i], options.decide);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    } else {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i]; });
    }
    if (errors[i]) {
      if (!first_error) first_error = errors[i];
      continue;
    }
    if (first_error) continue;
    if (options.on_record) options.on_record(*slots[i]);
    out.push_back(std::move(*slots[i]));
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace binomgroup
