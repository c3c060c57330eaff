#pragma once

#include <functional>

namespace boxhead {

// Intra-op parallelism cap, from BOXHEAD_THREADS (default 1). Work is split
// over the batch dimension only; every batch entry is computed independently
// with the same floating-point order, so results are identical for any
// thread count.
int thread_count();

void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace boxhead
