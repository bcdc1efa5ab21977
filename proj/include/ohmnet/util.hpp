#pragma once

#include <cstddef>
#include <functional>

namespace ohmnet {

// Parallelism cap: OHMNET_THREADS when set (minimum 1), otherwise the
// hardware concurrency.
unsigned thread_cap();

// Runs fn(0..count-1) across at most thread_cap() threads. fn must be
// safe to call concurrently; iteration order is unspecified.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace ohmnet
