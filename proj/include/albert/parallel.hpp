#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace e6 {

/// Number of worker threads: explicit request, else ALBERT_E6_THREADS,
/// else hardware concurrency.
inline unsigned resolve_threads(unsigned requested = 0) {
  if (requested) return requested;
  if (const char* env = std::getenv("ALBERT_E6_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Splits [0, total) into per-thread chunks and runs fn(begin, end, tid).
/// The partition depends only on (total, threads), so counters combined by
/// reduction are deterministic.
inline void parallel_chunks(uint64_t total, unsigned threads,
                            const std::function<void(uint64_t, uint64_t, unsigned)>& fn) {
  if (threads <= 1 || total < 2) {
    fn(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    uint64_t b = t * chunk;
    uint64_t e = b + chunk < total ? b + chunk : total;
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, t] { fn(b, e, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace e6
