#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace asmkit {

namespace detail {
inline std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{0};
  return cap;
}
}  // namespace detail

/// Caps worker threads; 0 restores the default (ASMKIT_THREADS, else hardware concurrency).
inline void set_thread_count(int n) { detail::thread_cap() = std::max(0, n); }

inline int thread_count() {
  if (int cap = detail::thread_cap(); cap > 0) return cap;
  if (char const* env = std::getenv("ASMKIT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `task(k)` for k in [0, count) and returns the results in index order,
/// so any fold over them is independent of scheduling.
template <class R>
std::vector<R> parallel_map(int count, std::function<R(int)> const& task) {
  std::vector<std::optional<R>> slots(count);
  auto collect = [&] {
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  };
  int const workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int k = 0; k < count; ++k) slots[k].emplace(task(k));
    return collect();
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (int k = next++; k < count; k = next++) slots[k].emplace(task(k));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return collect();
}

}  // namespace asmkit
