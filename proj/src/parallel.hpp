#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qboson::detail {

/// Fixed chunk length for node loops; chunk boundaries never depend on the
/// thread count, so per-chunk partials merged in chunk order are reproducible.
inline constexpr std::size_t chunk_length = 256;

inline std::size_t chunk_count(std::size_t count) { return (count + chunk_length - 1) / chunk_length; }

/// Runs body(chunk, begin, end) for every chunk, on as many threads as the
/// hardware offers. The first exception thrown by any chunk is rethrown.
template <class Body>
void for_each_chunk(std::size_t count, Body&& body) {
  const std::size_t chunks = chunk_count(count);
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        body(c, c * chunk_length, std::min(count, (c + 1) * chunk_length));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qboson::detail
