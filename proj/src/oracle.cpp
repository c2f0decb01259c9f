#include "dtexact/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dtexact {

namespace {

// Candidate splits are restricted to positions with at least one example
// strictly on each side of the current subset. This is safe for minimum
// size: in any consistent tree, a cut with an empty side can be replaced by
// its nonempty child's subtree, giving a strictly smaller consistent tree,
// so some minimum tree uses only nontrivially separating cuts at every
// node. The restriction is what keeps the exhaustive recursion finite.
struct BruteSearch {
  const Dataset& ds;
  const std::vector<int>& dims;
  const SolveDeadline* deadline;

  std::optional<int> min_size(const std::vector<int>& subset, int budget) {
    check_deadline(deadline);
    if (ds.uniform_label(subset)) return 0;
    if (budget <= 0) return std::nullopt;

    std::optional<int> best;
    for (int dim : dims) {
      auto [lo_rank, hi_rank] = rank_range(subset, dim);
      for (int pos = lo_rank; pos < hi_rank; ++pos) {
        auto [left, right] = ds.partition(subset, SplitRef{dim, pos});
        for (int j = 0; j <= budget - 1; ++j) {
          auto l = min_size(left, j);
          if (!l) continue;
          auto r = min_size(right, budget - 1 - j);
          if (!r) continue;
          int total = *l + *r + 1;
          if (!best || total < *best) best = total;
        }
      }
    }
    return best;
  }

  std::pair<int, int> rank_range(const std::vector<int>& subset, int dim) const {
    int lo = ds.rank(subset.front(), dim);
    int hi = lo;
    for (int e : subset) {
      lo = std::min(lo, ds.rank(e, dim));
      hi = std::max(hi, ds.rank(e, dim));
    }
    return {lo, hi};
  }
};

}  // namespace

std::optional<int> brute_min_size(const Dataset& ds, const OracleLimits& lim) {
  if (lim.max_size > 6)
    throw std::invalid_argument("oracle max_size capped at 6 (exhaustive search)");
  if (lim.max_size < 0) return std::nullopt;

  std::vector<int> dims = lim.dims_allowed;
  if (dims.empty()) {
    dims.resize(ds.dims());
    std::iota(dims.begin(), dims.end(), 0);
  }
  for (int dim : dims)
    if (dim < 0 || dim >= ds.dims())
      throw std::invalid_argument("oracle dims_allowed out of range");

  BruteSearch search{ds, dims, lim.deadline};
  return search.min_size(ds.all_example_ids(), lim.max_size);
}

}  // namespace dtexact
