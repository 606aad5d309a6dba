#include "spreadbench/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spreadbench {

unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned effective_workers(std::size_t count, unsigned requested) noexcept {
  const std::size_t capped = std::min<std::size_t>(resolve_workers(requested), count);
  return static_cast<unsigned>(std::max<std::size_t>(1, capped));
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t item, unsigned worker)>& task) {
  if (count == 0) return;
  const unsigned threads = effective_workers(count, workers);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i, 0);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&](unsigned worker) {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        task(i, worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(body, w);
    body(0);
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace spreadbench
