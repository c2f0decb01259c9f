#pragma once

#include <optional>
#include <vector>

#include "dtexact/dataset.hpp"
#include "dtexact/solve_limits.hpp"

namespace dtexact {

struct OracleLimits {
  int max_size = 6;                // exhaustive search beyond this is infeasible
  std::vector<int> dims_allowed;   // empty means all dimensions
  const SolveDeadline* deadline = nullptr;
};

// Independent brute-force reference: minimum tree size <= max_size found by
// plain recursion over every dimension, every nontrivially separating split
// position, and every left/right size split. No binary search, no
// memoization. Used to certify the dp and fpt solvers on small instances.
// Throws std::invalid_argument when max_size exceeds 6.
std::optional<int> brute_min_size(const Dataset& ds, const OracleLimits& lim);

}  // namespace dtexact
