#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linorbit/curve.hpp"

namespace linorbit {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;      // identities actually evaluated
  std::string counterexample;  // first failing spec, smallest-first order
};

/// Coprime pairs (m, n) with 1 <= m < n <= max_n, ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_n);

/// The component-multiplicity lists the verification grid ranges over.
const std::vector<std::vector<std::int64_t>>& grid_s_lists();

/// Stage sums equal the closed per-cusp form for every profile and every
/// coprime pair up to max_n, with formal S.
CheckResult check_ladder_closed_form(std::int64_t max_n);

/// On the full grid: the pipeline numerator equals n Q formally in
/// (q, qbar, r) and numerically at r, q, qbar in {0, 1, 2}.
CheckResult check_pipeline_matches_closed(std::int64_t max_n);

/// Boxed global integrals equal the printed closed form on the grid.
CheckResult check_global_boxes(std::int64_t max_n);

/// Assembled local correction equals the bundled raw polynomial and its
/// structured rewriting at several coprime pairs, with formal S.
CheckResult check_raw_local_fixture();

/// Predegree: conic coefficients, triangle-only factorization, and
/// c_7 = n Q across the grid.
CheckResult check_predegree(std::int64_t max_n);

/// Q is symmetric under (m, q) <-> (mbar, qbar); S = 0 forces Q = 0; grid
/// degrees and predegree coefficients are nonnegative integers.
CheckResult check_symmetry_and_integrality(std::int64_t max_n);

/// Derivative counts equal direct single-profile assembly on the two
/// bundled table types.
CheckResult check_constrained_routes();

/// Known stabilizer component counts.
CheckResult check_stabilizers();

struct VerifyOptions {
  bool deep = false; // extends the ladder identity to n <= 20
};

/// Runs the whole battery, in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

} // namespace linorbit
