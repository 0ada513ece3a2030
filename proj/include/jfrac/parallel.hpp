#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace jfrac {

/// Worker count: the hardware concurrency, capped by the JFRAC_THREADS
/// environment variable when that is set to a positive integer.
inline unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("JFRAC_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long parsed = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || parsed < 1) return hw;
  return std::min(hw, static_cast<unsigned>(parsed));
}

/// Evaluates fn(0), ..., fn(count-1) across the thread budget and
/// returns the results in index order, so the output is identical to a
/// serial run no matter how the work was scheduled.  The first exception
/// thrown by fn (if any) is rethrown after all workers stop.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(count);
  unsigned budget = thread_budget();
  if (count <= 1 || budget <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  budget = std::min<unsigned>(budget, static_cast<unsigned>(count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error = nullptr;
  std::mutex error_mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(budget);
  for (unsigned t = 0; t < budget; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace jfrac
