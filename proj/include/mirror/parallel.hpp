#pragma once

#include <cstddef>
#include <functional>

namespace mirror {

// Number of workers used by parallel_for. Controlled by the MIRROR_THREADS
// environment variable (0 or unset = hardware concurrency).
size_t worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker, so each index is processed exactly once and writes to index-mapped
// outputs stay deterministic regardless of the worker count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace mirror
