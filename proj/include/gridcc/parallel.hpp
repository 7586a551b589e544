#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace gridcc {

// Worker count: GRIDCC_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("GRIDCC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs task(index, worker) for index in [0, count) on a pool and returns the smallest index
// whose task reported a hit, together with its payload. Tasks above the current best index
// are skipped, so the answer does not depend on scheduling. `stop()` is polled between
// tasks; once it returns true no further tasks start and *completed is set to false.
//
// Worker is default-constructed once per thread and passed by reference (scratch space).
template <class Payload, class Worker, class Task, class Stop>
std::optional<std::pair<std::size_t, Payload>> parallel_first(std::size_t count, unsigned threads,
                                                              Task&& task, Stop&& stop,
                                                              bool* completed = nullptr) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::atomic<bool> halted{false};
  std::mutex mu;
  std::optional<std::pair<std::size_t, Payload>> result;
  std::exception_ptr error;

  auto run = [&] {
    try {
      Worker worker;
      for (;;) {
        if (stop()) {
          halted = true;
          return;
        }
        const auto i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        std::optional<Payload> hit = task(i, worker);
        if (hit) {
          std::lock_guard lock(mu);
          if (!result || i < result->first) {
            result.emplace(i, std::move(*hit));
            best = i;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      best = 0;
    }
  };

  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  if (error) std::rethrow_exception(error);
  if (completed) *completed = !halted || result.has_value();
  return result;
}

}  // namespace gridcc
