#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace braid {

// Calls body(i) for every i in [0, count) on up to `jobs` threads. The body
// must write only to slot i of its output, which keeps results independent of
// the thread count. The first exception thrown by any call is rethrown.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(count, jobs > 1 ? static_cast<std::size_t>(jobs) : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace braid
