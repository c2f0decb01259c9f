#include "dtexact/dp_solver.hpp"

#include <unordered_map>

namespace dtexact {

BoxKey full_box(const Dataset& ds) {
  BoxKey b;
  b.lo.assign(ds.dims(), 0);
  b.hi.resize(ds.dims());
  for (int dim = 0; dim < ds.dims(); ++dim) b.hi[dim] = ds.domain_size(dim);
  return b;
}

std::vector<int> box_examples(const Dataset& ds, const BoxKey& b) {
  std::vector<int> out;
  for (int e = 0; e < ds.size(); ++e) {
    bool inside = true;
    for (int dim = 0; dim < ds.dims() && inside; ++dim) {
      int r = ds.rank(e, dim);
      inside = b.lo[dim] < r && r <= b.hi[dim];
    }
    if (inside) out.push_back(e);
  }
  return out;
}

namespace {

struct MemoEntry {
  int size = 0;
  // Chosen cut for non-uniform boxes; dim < 0 marks a leaf with `label`.
  int cut_dim = -1;
  int cut_pos = 0;
  ClassId label = 0;
};

struct DpSearch {
  const Dataset& ds;
  const DpOptions& opt;
  std::unordered_map<BoxKey, MemoEntry, BoxKeyHash> memo;

  // Shrinking a box to the bounding box of its examples never changes the
  // minimum (the example set is identical and optimal trees never cut
  // through an empty margin), so it is a pure memo-sharing optimization.
  BoxKey canonical(const BoxKey& box, const std::vector<int>& subset) const {
    if (!opt.shrink_boxes || subset.empty()) return box;
    BoxKey b = box;
    for (int dim = 0; dim < ds.dims(); ++dim) {
      int lo = ds.rank(subset.front(), dim), hi = lo;
      for (int e : subset) {
        lo = std::min(lo, ds.rank(e, dim));
        hi = std::max(hi, ds.rank(e, dim));
      }
      b.lo[dim] = lo - 1;
      b.hi[dim] = hi;
    }
    return b;
  }

  const MemoEntry& solve(const BoxKey& box, const std::vector<int>& subset) {
    check_deadline(opt.deadline);
    BoxKey key = canonical(box, subset);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    MemoEntry entry;
    if (auto label = ds.uniform_label(subset)) {
      entry.size = 0;
      entry.label = *label == kAnyClass ? 0 : *label;
      return memo.emplace(std::move(key), entry).first->second;
    }

    // A non-uniform box always has an interior position in some dimension
    // (otherwise all contained examples would share all ranks and with them
    // their label), so the recurrence below always finds a cut.
    entry.size = -1;
    for (int dim = 0; dim < ds.dims(); ++dim) {
      for (int pos = key.lo[dim] + 1; pos < key.hi[dim]; ++pos) {
        SplitRef split{dim, pos};
        auto [left, right] = ds.partition(subset, split);
        if (opt.prune_empty_sides && (left.empty() || right.empty())) continue;

        BoxKey le = key, gt = key;
        le.hi[dim] = pos;
        gt.lo[dim] = pos;
        int total = solve(le, left).size + solve(gt, right).size + 1;
        if (entry.size < 0 || total < entry.size) {
          entry.size = total;
          entry.cut_dim = dim;
          entry.cut_pos = pos;
        }
      }
    }
    if (entry.size < 0)
      throw std::logic_error("non-uniform box without an interior split");
    return memo.emplace(std::move(key), entry).first->second;
  }

  DecisionTree rebuild(const BoxKey& box, const std::vector<int>& subset) {
    BoxKey key = canonical(box, subset);
    const MemoEntry& entry = memo.at(key);
    if (entry.cut_dim < 0) return DecisionTree::leaf(entry.label);
    SplitRef split{entry.cut_dim, entry.cut_pos};
    auto [left, right] = ds.partition(subset, split);
    BoxKey le = key, gt = key;
    le.hi[entry.cut_dim] = entry.cut_pos;
    gt.lo[entry.cut_dim] = entry.cut_pos;
    return DecisionTree::cut(split, rebuild(le, left), rebuild(gt, right));
  }
};

}  // namespace

DpResult dp_min_size(const Dataset& ds, const DpOptions& opt) {
  DpSearch search{ds, opt, {}};
  BoxKey root = full_box(ds);
  std::vector<int> all = ds.all_example_ids();
  int size = search.solve(root, all).size;
  return DpResult{size, search.rebuild(root, all)};
}

}  // namespace dtexact
