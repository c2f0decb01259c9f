#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dtexact/solve_limits.hpp"
#include "dtexact/tree.hpp"

namespace dtexact {

// Search budget for the recursive solver: at most `s` inner nodes, cutting
// only dimensions in dims_allowed (0-based, sorted, nonempty).
struct Budget {
  int s = 0;
  std::vector<int> dims_allowed;
};

// All dimensions of ds, the default dimension restriction.
std::vector<int> all_dims(const Dataset& ds);

struct FptOptions {
  // Cache results per (example subset, budget). Optimization only; results
  // are unchanged.
  bool memoize = false;
  const SolveDeadline* deadline = nullptr;
};

// Recursive size-budgeted search: if the subset is uniform the answer is a
// leaf; otherwise, for every allowed dimension i and every left-size j, a
// binary search finds the largest threshold whose "<=" side still admits a
// tree of size j, the two sides are solved recursively with budgets j and
// s-j-1, and the smallest tree found overall is returned. Returns the
// minimum-size tree among those with at most b.s inner nodes, or nullopt if
// none exists. Ties keep the first find in ascending (dimension, j) order.
std::optional<DecisionTree> smallest_decision_tree(const Dataset& ds,
                                                   std::span<const int> subset,
                                                   const Budget& b,
                                                   const FptOptions& opt = {});

// Largest split position in dimension dim whose "<=" side of `subset`
// admits a tree of size at most j over b.dims_allowed. Position 0 (empty
// left side) when even the smallest domain value fails. The predicate is
// monotone: shrinking the left side can only make the tree easier.
SplitRef binary_search_threshold(const Dataset& ds, std::span<const int> subset,
                                 int dim, int j, const Budget& b,
                                 const FptOptions& opt = {});

// smallest_decision_tree on the full example set, evaluated by iterative
// deepening over the budget: the first budget that admits a tree yields the
// minimum-size tree, identical to a direct call with budget s. Negative s
// yields nullopt.
std::optional<DecisionTree> solve_bounded(const Dataset& ds, long long s,
                                          std::optional<std::vector<int>> dims_allowed = {},
                                          const FptOptions& opt = {});

// Two-class solver with budget s = 2d(2R-1). R is a promise parameter: if
// some minimum-size tree has at most R leaves labeled `red`, the result is
// a globally minimum tree; the returned tree itself may use more red
// leaves. Throws std::invalid_argument unless the dataset has two classes.
std::optional<DecisionTree> solve_with_red_leaf_bound(const Dataset& ds, int R,
                                                      ClassId red,
                                                      const FptOptions& opt = {});

// Tries both classes as "red" and returns the smaller result.
std::optional<DecisionTree> solve_min_leaf_class(const Dataset& ds, int R,
                                                 const FptOptions& opt = {});

}  // namespace dtexact
