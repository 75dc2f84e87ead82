#pragma once

#include <functional>

namespace grashof {

// Worker count from GRASHOF_EXPAND_THREADS, default 1; 0 means one per core.
int thread_count();

// Runs body(i) for i in [0, n). Exceptions from any worker are rethrown.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace grashof
