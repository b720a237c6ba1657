#pragma once

// Deterministic data-parallel helper. Work is split into contiguous index
// blocks, one per worker; call sites write only to per-index slots and run
// any reductions afterwards in index order, so results never depend on the
// thread count or schedule.

#include <cstddef>
#include <functional>

namespace dilatelab {

// Worker count: `requested` if positive, else the DILATE_LAB_THREADS
// environment variable if set and positive, else hardware concurrency
// (at least 1).
int resolve_thread_count(int requested = 0);

// Runs body(begin, end) over a static partition of [0, count). body is
// invoked once per worker with a contiguous range; with one worker it runs
// inline on the calling thread.
void parallel_for_blocks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body,
                         int threads = 0);

}  // namespace dilatelab
