#pragma once

#include <cstddef>
#include <thread>
#include <type_traits>
#include <vector>

namespace hardy {

/// Parallelism cap from the HARDY_THREADS environment variable.
/// Absent or unparsable means 1 (sequential).
std::size_t max_threads();

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order.  Work is split across at most max_threads() threads; the result
/// vector (and hence any reduction over it) is deterministic regardless of
/// the thread count.
template <typename F>
auto parallel_map(std::size_t count, F&& fn)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> results(count);
  const std::size_t threads = std::min(max_threads(), count == 0 ? 1 : count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) results[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace hardy
