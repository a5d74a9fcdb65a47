#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace evalcode {

/// Worker count: the value from set_thread_count, else EVALCODE_THREADS, else the hardware count.
std::size_t thread_count();
/// 0 restores the automatic choice.
void set_thread_count(std::size_t n);

/**
 * Runs body(begin, end, worker) over contiguous chunks of [0, n), one chunk
 * per worker. Chunks are in index order, so worker w always owns a range
 * preceding worker w+1's. The first exception thrown by any worker is rethrown.
 */
template <class Body>
void parallel_chunks(std::size_t n, std::size_t min_chunk, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(thread_count(), n / std::max<std::size_t>(1, min_chunk)));
  if (workers <= 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(n, w * step), hi = std::min(n, lo + step);
    pool.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Number of chunks parallel_chunks will use for n items.
inline std::size_t chunk_count(std::size_t n, std::size_t min_chunk) {
  return std::max<std::size_t>(1, std::min(thread_count(), n / std::max<std::size_t>(1, min_chunk)));
}

}  // namespace evalcode
