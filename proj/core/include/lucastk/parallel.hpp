#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lucastk {

/// Worker count from LUCASTK_JOBS, else the hardware concurrency.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("LUCASTK_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

constexpr std::size_t kBlockSize = 64;

/// Applies fn to every index in [0, count) and returns the results in index
/// order. Indices are handed out in blocks of 64; the output never depends on
/// the number of workers.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  if (count == 0) return out;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>((count + kBlockSize - 1) / kBlockSize)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(kBlockSize);
      if (begin >= count) return;
      std::size_t end = std::min(count, begin + kBlockSize);
      try {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace lucastk
