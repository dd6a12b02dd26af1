#pragma once

#include <cstddef>
#include <functional>

namespace lep {

// Runs fn(0 .. n-1) on up to `jobs` worker threads. Work items are handed
// out by an atomic cursor and callers own result placement by index, so
// output ordering never depends on scheduling. The first exception thrown
// by any item is rethrown after all workers join.
void parallel_for_indexed(std::size_t n, unsigned jobs,
                          const std::function<void(std::size_t)>& fn);

}  // namespace lep
