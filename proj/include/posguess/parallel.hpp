#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace posguess {

/// Splits [0, count) into at most `jobs` contiguous chunks and calls
/// fn(chunk, begin, end) for each, one thread per chunk. Chunk boundaries
/// depend only on count and jobs. The first exception thrown is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  auto bounds = [&](std::size_t c) { return count * c / chunks; };
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      threads.emplace_back([&, c] {
        try {
          fn(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, unsigned jobs) {
  return std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
}

}  // namespace posguess
