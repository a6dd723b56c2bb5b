#ifndef MSYM_PARALLEL_HPP
#define MSYM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace msym {

/// Set inside worker threads so nested parallel_map calls run inline.
inline thread_local bool in_parallel_region = false;

/// Process-wide worker count used when none is passed explicitly.
int default_threads();
void set_default_threads(int threads);

/// Evaluates f(0..n-1) on up to `threads` workers. Results are stored by
/// index, so the output never depends on scheduling. The first exception
/// thrown by any task is rethrown.
template <class F>
auto parallel_map(std::size_t n, F f, int threads = default_threads())
    -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (workers <= 1 || in_parallel_region) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    in_parallel_region = true;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace msym

#endif  // MSYM_PARALLEL_HPP
