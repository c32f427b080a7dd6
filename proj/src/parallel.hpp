#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ramsey::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Hands out indices 0..count-1 in increasing order to `threads` workers.
// A worker stops pulling once `keep_going(next_index)` is false.
template <class Body, class KeepGoing>
void for_each_index(std::size_t count, unsigned threads, Body&& body, KeepGoing&& keep_going) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || !keep_going(i)) return;
      body(i);
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (n <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
}

}  // namespace ramsey::detail
