#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace ilg {

// Runs f(0..n-1) on `workers` threads. Work distribution is dynamic, so
// callers that need determinism must write results into per-index slots and
// merge in index order afterwards.
template <typename F>
void parallel_for(size_t n, int workers, F&& f) {
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    size_t i;
    while ((i = next.fetch_add(1)) < n) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  size_t w = std::min<size_t>(workers, n);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (size_t t = 0; t < w; ++t) threads.emplace_back(body);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ilg
