#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wtreelab {

/// Worker count: WTREELAB_THREADS when set, otherwise hardware concurrency,
/// clamped to [1, 16].
int worker_count();

/// Applies fn(i) for i in [0, count) across workers and returns results in
/// index order, so the output is identical to a sequential run. The first
/// exception wins and is rethrown after all workers join.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> results(count);
  int workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t pool_size = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace wtreelab
