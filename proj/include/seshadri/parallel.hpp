#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace seshadri {

/// 0 means one thread per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Splits [0, count) into at most `threads` contiguous chunks, runs
/// fn(begin, end) on each and returns the results in chunk order, so callers
/// that merge in order get the same answer for every thread count.
template <typename Fn>
auto run_chunked(std::size_t count, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}, std::size_t{0}));
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(0, count);
    return results;
  }
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t i = 0; i < chunks; ++i) {
      const std::size_t begin = count * i / chunks;
      const std::size_t end = count * (i + 1) / chunks;
      workers.emplace_back([&results, &fn, i, begin, end] { results[i] = fn(begin, end); });
    }
  }
  return results;
}

}  // namespace seshadri
