#pragma once

#include <cstddef>
#include <functional>

namespace fracwave {

// Worker count: min(hardware_concurrency, FRACWAVE_THREADS if set).
int worker_count();

// Runs fn(begin, end) on contiguous index chunks across workers and joins.
// fn must not throw across threads for distinct chunks; exceptions are
// rethrown on the calling thread.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace fracwave
