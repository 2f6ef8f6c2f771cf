// Acceptance harness: runs every validation check and prints one line per
// criterion. Exits nonzero if any check fails. Expect a few minutes of
// runtime on a single core (the Richardson reference in check 2 dominates).
#include <algorithm>
#include <cstdio>

#include "fracwave/validation.hpp"

int main() {
  bool ok = true;
  const auto records = fracwave::run_acceptance([&](const fracwave::CheckRecord& r) {
    std::printf("[%s] %2d %-34s error %.3e tol %.1e (%.1fs)%s%s\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.error,
                r.tol, r.seconds, r.detail.empty() ? "" : " | ",
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  });
  std::printf("%zu/%zu criteria passed\n",
              records.size() - static_cast<std::size_t>(
                                   std::count_if(records.begin(), records.end(),
                                                 [](const auto& r) { return !r.pass; })),
              records.size());
  return ok ? 0 : 1;
}
