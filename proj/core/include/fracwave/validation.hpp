#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fracwave {

// One acceptance check: a named property of the implementation, with the
// measured error, the pinned tolerance it is judged against, and wall time.
struct CheckRecord {
  int id = 0;
  std::string name;
  double error = 0.0;   // binding measured error (details carry the rest)
  double tol = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;   // secondary measurements, human-readable
};

// Individual acceptance checks (ids 1..11). Each is deterministic: fixed
// grids, fixed probe sets, seeded random draws.
CheckRecord check_symbol_correctness();     // 1
CheckRecord check_route_b_vs_route_a();     // 2 (minutes)
CheckRecord check_kernel2_limit();          // 3
CheckRecord check_dtn_vs_route_a();         // 4
CheckRecord check_neumann_extraction();     // 5
CheckRecord check_solver_pipeline();        // 6
CheckRecord check_energy_identity();        // 7
CheckRecord check_q_identities();           // 8
CheckRecord check_riesz_reduction();        // 9
CheckRecord check_global_ads();             // 10
CheckRecord check_product_space();          // 11

// Runs all checks in order; `progress` (if set) is invoked after each one.
std::vector<CheckRecord> run_acceptance(
    const std::function<void(const CheckRecord&)>& progress = nullptr);

}  // namespace fracwave
