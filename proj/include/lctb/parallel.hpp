#pragma once

#include <cstddef>
#include <functional>

namespace lctb {

/// Worker count: LCTB_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) over contiguous chunks. Each index is
/// handled by exactly one worker, so results written per index are
/// deterministic regardless of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lctb
