#include "dtexact/tree.hpp"

#include <algorithm>

namespace dtexact {

DecisionTree DecisionTree::leaf(ClassId c) {
  auto node = std::make_shared<Node>();
  node->label = c;
  return DecisionTree(std::move(node), 0);
}

DecisionTree DecisionTree::cut(SplitRef s, DecisionTree le, DecisionTree gt) {
  auto node = std::make_shared<Node>();
  node->split = s;
  int size = le.size() + gt.size() + 1;
  node->le = std::move(le.root_);
  node->gt = std::move(gt.root_);
  return DecisionTree(std::move(node), size);
}

namespace {

bool nodes_equal(const DecisionTree::Node& a, const DecisionTree::Node& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.label == b.label;
  return a.split == b.split && nodes_equal(*a.le, *b.le) && nodes_equal(*a.gt, *b.gt);
}

}  // namespace

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  return nodes_equal(a.root(), b.root());
}

ClassId classify(const DecisionTree& tree, const Dataset& ds,
                 std::span<const Rational> point) {
  const DecisionTree::Node* node = &tree.root();
  while (!node->is_leaf()) {
    Rational thr = ds.threshold_value(node->split);
    node = point[node->split.dim] <= thr ? node->le.get() : node->gt.get();
  }
  return node->label;
}

namespace {

// Dataset examples descend by rank comparison, which matches the
// materialized thresholds exactly.
const DecisionTree::Node* descend(const DecisionTree::Node* node,
                                  const Dataset& ds, int example) {
  while (!node->is_leaf()) {
    node = ds.rank(example, node->split.dim) <= node->split.pos ? node->le.get()
                                                                : node->gt.get();
  }
  return node;
}

}  // namespace

bool validate(const DecisionTree& tree, const Dataset& ds) {
  for (int e = 0; e < ds.size(); ++e)
    if (descend(&tree.root(), ds, e)->label != ds.label(e)) return false;
  return true;
}

namespace {

struct StatsWalk {
  ClassId red;
  TreeStats out;

  void walk(const DecisionTree::Node& node, int nonessential_streak) {
    if (node.is_leaf()) {
      ++out.leaves_per_class[node.label];
      return;
    }
    ++out.size;
    bool essential = contains_red(*node.le) && contains_red(*node.gt);
    if (essential) ++out.essential_count;
    int streak = essential ? 0 : nonessential_streak + 1;
    out.max_nonessential_run = std::max(out.max_nonessential_run, streak);
    walk(*node.le, streak);
    walk(*node.gt, streak);
  }

  bool contains_red(const DecisionTree::Node& node) const {
    if (node.is_leaf()) return node.label == red;
    return contains_red(*node.le) || contains_red(*node.gt);
  }
};

}  // namespace

TreeStats tree_stats(const DecisionTree& tree, const Dataset& ds, ClassId red) {
  StatsWalk w;
  w.red = red;
  w.out.leaves_per_class.assign(ds.classes(), 0);
  w.walk(tree.root(), 0);
  return w.out;
}

std::vector<std::vector<int>> leaf_example_sets(const DecisionTree& tree,
                                                const Dataset& ds) {
  // Positions matter, not node identity: memoizing solvers may share
  // subtree objects across different places in the tree.
  std::vector<std::vector<int>> sets;
  auto collect = [&](auto&& self, const DecisionTree::Node& n,
                     std::vector<int> subset) -> void {
    if (n.is_leaf()) {
      sets.push_back(std::move(subset));
      return;
    }
    auto [le, gt] = ds.partition(subset, n.split);
    self(self, *n.le, std::move(le));
    self(self, *n.gt, std::move(gt));
  };
  collect(collect, tree.root(), ds.all_example_ids());
  return sets;
}

}  // namespace dtexact
