#include "dtexact/fpt_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dtexact {

std::vector<int> all_dims(const Dataset& ds) {
  std::vector<int> dims(ds.dims());
  std::iota(dims.begin(), dims.end(), 0);
  return dims;
}

namespace {

void validate_budget(const Dataset& ds, const Budget& b) {
  if (b.dims_allowed.empty())
    throw std::invalid_argument("dims_allowed must not be empty");
  for (int dim : b.dims_allowed)
    if (dim < 0 || dim >= ds.dims())
      throw std::invalid_argument("dims_allowed out of range");
}

struct SubsetKey {
  std::vector<int> ids;
  int s;
  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
};

struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.s) * 0x9e3779b97f4a7c15ull;
    for (int v : k.ids) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

struct FptSearch {
  const Dataset& ds;
  const std::vector<int>& dims;
  const FptOptions& opt;
  std::unordered_map<SubsetKey, std::optional<DecisionTree>, SubsetKeyHash> cache;

  std::optional<DecisionTree> smallest(const std::vector<int>& subset, int s) {
    check_deadline(opt.deadline);
    if (!opt.memoize) return search(subset, s);
    SubsetKey key{subset, s};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto result = search(subset, s);
    cache.emplace(std::move(key), result);
    return result;
  }

  std::optional<DecisionTree> search(const std::vector<int>& subset, int s) {
    if (auto label = ds.uniform_label(subset))
      return DecisionTree::leaf(*label == kAnyClass ? 0 : *label);
    if (s <= 0) return std::nullopt;

    std::optional<DecisionTree> best;
    for (int dim : dims) {
      for (int j = 0; j <= s - 1; ++j) {
        SplitRef split = threshold_search(subset, dim, j);
        auto [left, right] = ds.partition(subset, split);
        auto gt = smallest(right, s - j - 1);
        if (!gt) continue;
        auto le = smallest(left, j);
        if (!le) continue;
        DecisionTree candidate = DecisionTree::cut(split, std::move(*le), std::move(*gt));
        if (!best || candidate.size() < best->size()) best = std::move(candidate);
      }
    }
    return best;
  }

  // Largest pos in {0, ..., |D_dim|} whose "<=" side admits a tree of size
  // at most j. The left side only grows with pos and a consistent tree for
  // a superset is consistent for every subset, so the admissibility
  // predicate is monotone and binary search applies; we track the last
  // successful probe.
  SplitRef threshold_search(const std::vector<int>& subset, int dim, int j) {
    int lo = 1;
    int hi = ds.domain_size(dim);
    int best = 0;
    while (lo <= hi) {
      int mid = lo + (hi - lo) / 2;
      auto [left, right] = ds.partition(subset, SplitRef{dim, mid});
      (void)right;
      if (smallest(left, j)) {
        best = mid;
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    return SplitRef{dim, best};
  }
};

}  // namespace

std::optional<DecisionTree> smallest_decision_tree(const Dataset& ds,
                                                   std::span<const int> subset,
                                                   const Budget& b,
                                                   const FptOptions& opt) {
  validate_budget(ds, b);
  if (b.s < 0) return std::nullopt;
  FptSearch search{ds, b.dims_allowed, opt, {}};
  return search.smallest(std::vector<int>(subset.begin(), subset.end()), b.s);
}

SplitRef binary_search_threshold(const Dataset& ds, std::span<const int> subset,
                                 int dim, int j, const Budget& b,
                                 const FptOptions& opt) {
  validate_budget(ds, b);
  if (std::find(b.dims_allowed.begin(), b.dims_allowed.end(), dim) ==
      b.dims_allowed.end())
    throw std::invalid_argument("dim not in dims_allowed");
  FptSearch search{ds, b.dims_allowed, opt, {}};
  return search.threshold_search(std::vector<int>(subset.begin(), subset.end()),
                                 dim, j);
}

std::optional<DecisionTree> solve_bounded(const Dataset& ds, long long s,
                                          std::optional<std::vector<int>> dims_allowed,
                                          const FptOptions& opt) {
  Budget b;
  b.dims_allowed = dims_allowed ? std::move(*dims_allowed) : all_dims(ds);
  std::sort(b.dims_allowed.begin(), b.dims_allowed.end());
  validate_budget(ds, b);

  std::vector<int> all = ds.all_example_ids();
  for (long long budget = 0; budget <= s; ++budget) {
    b.s = static_cast<int>(budget);
    if (auto tree = smallest_decision_tree(ds, all, b, opt)) return tree;
  }
  return std::nullopt;
}

std::optional<DecisionTree> solve_with_red_leaf_bound(const Dataset& ds, int R,
                                                      ClassId red,
                                                      const FptOptions& opt) {
  // A dataset where only one class occurs is the degenerate two-class case;
  // more than two classes is rejected (R is a two-class parameter).
  if (ds.classes() > 2)
    throw std::invalid_argument("red-leaf bound is defined for two classes only");
  if (R < 1) throw std::invalid_argument("R must be at least 1");
  if (red < 0 || red >= ds.classes())
    throw std::invalid_argument("red class out of range");
  long long s = 2ll * ds.dims() * (2ll * R - 1);
  return solve_bounded(ds, s, std::nullopt, opt);
}

std::optional<DecisionTree> solve_min_leaf_class(const Dataset& ds, int R,
                                                 const FptOptions& opt) {
  if (ds.classes() > 2)
    throw std::invalid_argument("red-leaf bound is defined for two classes only");
  auto first = solve_with_red_leaf_bound(ds, R, 0, opt);
  if (ds.classes() < 2) return first;
  auto second = solve_with_red_leaf_bound(ds, R, 1, opt);
  if (!first) return second;
  if (!second) return first;
  return second->size() < first->size() ? second : first;
}

}  // namespace dtexact
