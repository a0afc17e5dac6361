#pragma once

#include <functional>

namespace veckin {

// Worker count: min(hardware, VECKIN_THREADS). Always >= 1.
int worker_count();

// Splits [0, n) into contiguous chunks, one per worker. fn(begin, end) runs on
// each chunk; chunk boundaries depend only on n and the worker count, and all
// writes must target disjoint ranges, so results are thread-count independent.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace veckin
