#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace geostat {

// Runs fn(chunk_index) for chunk_index in [0, n_chunks).  Work is striped
// over a fixed worker count, so per-chunk results (stored by the caller,
// reduced in chunk order) do not depend on scheduling.
inline void parallel_for_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn,
                                unsigned max_threads = 0) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (max_threads != 0 && max_threads < hw) hw = max_threads;
  if (hw <= 1 || n_chunks <= 1) {
    for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(hw);
  for (unsigned t = 0; t < hw; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n_chunks; i += hw) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace geostat
