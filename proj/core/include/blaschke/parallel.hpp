#pragma once

#include <functional>

namespace blaschke {

/// Worker count from ATLAS_THREADS, else the hardware concurrency (at least 1).
int default_thread_count();

/// Calls `row(i)` for every i in [0, rows) on up to `threads` workers. Rows are
/// handed out through an atomic counter; each call must write only its own
/// output slot, which keeps results independent of the schedule.
void parallel_rows(int rows, int threads, const std::function<void(int)>& row);

}  // namespace blaschke
