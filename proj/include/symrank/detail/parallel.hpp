#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace symrank::detail {

inline unsigned resolve_workers(unsigned requested, std::uint64_t total) {
  unsigned w = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (total < w) w = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  return w;
}

/// Splits [0, total) into contiguous chunks and calls fn(begin, end, worker)
/// for each, one thread per chunk. Exceptions are rethrown on the caller.
template <class Fn>
void parallel_for(std::uint64_t total, unsigned workers, Fn&& fn) {
  const unsigned w = resolve_workers(workers, total);
  if (w == 1) {
    fn(std::uint64_t{0}, total, 0U);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  const std::uint64_t chunk = (total + w - 1) / w;
  for (unsigned i = 0; i < w; ++i) {
    const std::uint64_t begin = std::min(total, chunk * i);
    const std::uint64_t end = std::min(total, begin + chunk);
    threads.emplace_back([&, begin, end, i] {
      try {
        fn(begin, end, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace symrank::detail
