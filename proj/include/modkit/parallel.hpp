#pragma once

#include <cstddef>
#include <functional>

namespace modkit {

/// Worker count: MODKIT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency. Never affects results, only speed.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads, each
/// taking one contiguous block. Exceptions from any worker are rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace modkit
