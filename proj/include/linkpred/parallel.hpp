#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace linkpred {

// Splits [0, count) into `workers` contiguous chunks and runs
// body(worker, begin, end) on each, one thread per chunk. Chunk boundaries
// depend only on (count, workers). The first exception thrown is rethrown.
template <class Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  auto chunk_begin = [&](unsigned w) { return count * w / workers; };
  if (workers == 1) {
    body(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w, chunk_begin(w), chunk_begin(w + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace linkpred
