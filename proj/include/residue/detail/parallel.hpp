#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace residue::detail {

/// Splits [0, n) into `workers` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each, one thread per chunk. Chunk
/// boundaries depend only on (n, workers); the first exception raised by a
/// worker is rethrown after all threads join.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || n < 2) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, n);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t k = 0; k < chunks; ++k) {
      const std::size_t begin = n * k / chunks;
      const std::size_t end = n * (k + 1) / chunks;
      threads.emplace_back([&, k, begin, end] {
        try {
          fn(k, begin, end);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace residue::detail
