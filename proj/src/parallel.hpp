#pragma once

#include <functional>

namespace qft::detail {

/// Worker count for element-parallel loops: hardware concurrency, capped by
/// the QFT_THREADS environment variable when set. Always >= 1.
int worker_count();

/// Runs fn(i) for i in [begin, end), statically partitioned across workers.
/// Each index is processed exactly once by one worker, so results do not
/// depend on the worker count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace qft::detail
