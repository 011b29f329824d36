#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pauc {

// Runs body(worker, begin, end) over a static partition of [0, n) into at most
// `width` contiguous chunks. The partition depends only on (n, width), so
// per-worker partial results merged in worker order are reproducible.
template <class Body>
void parallel_chunks(std::size_t n, unsigned width, Body&& body) {
  width = std::max(1u, width);
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(width, n);
  if (workers == 1) {
    body(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(static_cast<unsigned>(w), begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Number of workers parallel_chunks will actually use.
inline unsigned effective_workers(std::size_t n, unsigned width) {
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(std::max(1u, width), n)));
}

}  // namespace pauc
