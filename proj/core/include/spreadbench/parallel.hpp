#pragma once

#include <cstddef>
#include <functional>

namespace spreadbench {

/// 0 means "one worker per hardware thread".
unsigned resolve_workers(unsigned requested) noexcept;

/// Number of threads parallel_for will actually start for `count` items.
unsigned effective_workers(std::size_t count, unsigned requested) noexcept;

/// Runs `task(item, worker)` for item in [0, count) on effective_workers()
/// threads; `worker` indexes per-thread scratch state. Items are claimed
/// dynamically, so tasks must only write to item-owned or worker-owned state.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t item, unsigned worker)>& task);

}  // namespace spreadbench
