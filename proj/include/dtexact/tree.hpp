#pragma once

#include <memory>
#include <span>
#include <vector>

#include "dtexact/dataset.hpp"

namespace dtexact {

// Ordered binary tree of (dimension, split) inner nodes and class-labeled
// leaves. The "le" child takes points whose coordinate is <= the threshold,
// "gt" the rest. Trees are immutable values; copies share subtrees.
class DecisionTree {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    SplitRef split;      // meaningful for inner nodes only
    NodePtr le, gt;      // both null for leaves
    ClassId label = 0;   // meaningful for leaves only
    bool is_leaf() const { return le == nullptr; }
  };

  // Default-constructed tree is a single leaf labeled 0.
  DecisionTree() : DecisionTree(leaf(0)) {}

  static DecisionTree leaf(ClassId c);
  static DecisionTree cut(SplitRef s, DecisionTree le, DecisionTree gt);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  // Number of inner nodes.
  int size() const { return size_; }

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  DecisionTree(NodePtr root, int size) : root_(std::move(root)), size_(size) {}

  NodePtr root_;
  int size_ = 0;
};

// Label of the unique leaf whose path constraints `point` satisfies.
// Thresholds are materialized against ds's domains.
ClassId classify(const DecisionTree& tree, const Dataset& ds,
                 std::span<const Rational> point);

// True iff every example is classified to its own label (equivalently,
// every leaf's example set is uniform).
bool validate(const DecisionTree& tree, const Dataset& ds);

struct TreeStats {
  int size = 0;
  std::vector<int> leaves_per_class;
  // An inner node is essential (w.r.t. the designated "red" class) when both
  // of its subtrees contain a red leaf.
  int essential_count = 0;
  // Longest run of consecutive non-essential inner nodes on any
  // root-to-leaf path.
  int max_nonessential_run = 0;
};

TreeStats tree_stats(const DecisionTree& tree, const Dataset& ds, ClassId red);

// Example ids grouped by the leaf they land in, leaves in left-to-right
// order. The groups partition the dataset.
std::vector<std::vector<int>> leaf_example_sets(const DecisionTree& tree,
                                                const Dataset& ds);

}  // namespace dtexact
