#include "fracwave/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace fracwave {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("FRACWAVE_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) hw = std::min(hw, cap);
  }
  return hw;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  int nw = worker_count();
  if (nw <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  std::size_t chunk = (n + nw - 1) / nw;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errs(nw);
  for (int w = 0; w < nw; ++w) {
    std::size_t b = std::min(n, w * chunk);
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, &errs, w, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& ep : errs)
    if (ep) std::rethrow_exception(ep);
}

}  // namespace fracwave
