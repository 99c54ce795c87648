#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace icg {

// Runs body(i) for i = 0..count-1 on up to `jobs` threads. Each index is
// claimed exactly once; callers keep determinism by writing results into
// per-index slots. body must not throw.
template <class F>
inline void parallel_for_index(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (std::thread& t : pool) t.join();
}

}  // namespace icg
