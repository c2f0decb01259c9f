#pragma once

#include <cstddef>
#include <vector>

#include "dtexact/solve_limits.hpp"
#include "dtexact/tree.hpp"

namespace dtexact {

// Hyperrectangle of the split grid, identified by two split-position
// vectors. Example e lies in the box iff lo[i] < rank(e, i) <= hi[i] for
// every dimension i.
struct BoxKey {
  std::vector<int> lo, hi;
  friend bool operator==(const BoxKey&, const BoxKey&) = default;
};

struct BoxKeyHash {
  std::size_t operator()(const BoxKey& b) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : b.lo) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    for (int v : b.hi) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

// The box covering the whole split grid: lo = 0, hi = |D_i| per dimension.
BoxKey full_box(const Dataset& ds);

// Exactly the examples inside b.
std::vector<int> box_examples(const Dataset& ds, const BoxKey& b);

struct DpOptions {
  // Normalize each box to the bounding box of its contained examples before
  // memo lookup. Optimization only; results are unchanged.
  bool shrink_boxes = false;
  // Skip cut positions that leave one side without examples. Optimization
  // only; correctness tests run with this off.
  bool prune_empty_sides = false;
  const SolveDeadline* deadline = nullptr;
};

struct DpResult {
  int min_size = 0;
  DecisionTree witness;
};

// Minimum decision tree size for the dataset with a witness tree, computed
// by memoized recursion over grid hyperrectangles: a box is either uniform
// (size 0) or split at every interior position of every dimension, taking
// the best combination of the two sub-boxes. Ties prefer the lowest
// dimension, then the lowest split position. The memo table is the only
// mutable state; concurrent evaluation would need atomic, idempotent
// insertion per key (the default build is single-threaded).
DpResult dp_min_size(const Dataset& ds, const DpOptions& opt = {});

}  // namespace dtexact
