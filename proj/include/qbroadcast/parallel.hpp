// Chunked parallel loop over independent work items. Results are written to
// preallocated slots, so assembly is deterministic regardless of the thread
// count. QBROADCAST_THREADS caps the pool.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qbroadcast {

inline unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QBROADCAST_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
  const unsigned threads = std::min<std::size_t>(thread_cap(), std::max<std::size_t>(count, 1));
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qbroadcast
