#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace albertkit {

// Splits [0, n) into `workers` contiguous chunks, runs `fn(begin, end)` on each
// (one thread per chunk) and concatenates the per-chunk vectors in chunk order,
// so the result does not depend on the worker count.
template <class Fn>
auto parallel_collect(std::size_t n, unsigned workers, Fn fn) -> decltype(fn(std::size_t{}, std::size_t{})) {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2) return fn(0, n);

  std::size_t chunks = std::min<std::size_t>(workers, n);
  std::vector<Result> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = n * c / chunks;
    std::size_t end = n * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        parts[c] = fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Result out = std::move(parts[0]);
  for (std::size_t c = 1; c < chunks; ++c) {
    out.insert(out.end(), std::make_move_iterator(parts[c].begin()),
               std::make_move_iterator(parts[c].end()));
  }
  return out;
}

}  // namespace albertkit
