#pragma once

#include <string>

#include "dtexact/tree.hpp"

namespace dtexact {

class TreeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inner nodes serialize to {"dim": i, "thr": "...", "le": ..., "gt": ...}
// with 1-based dimensions and thresholds rendered exactly (decimal when
// possible, "p/q" otherwise); leaves to {"class": "<label>"}. The rendering
// is byte-stable for identical trees.
std::string tree_to_json(const DecisionTree& tree, const Dataset& ds,
                         bool pretty = true);

// Parses a serialized tree against ds: thresholds are mapped back to split
// positions of ds's domains, class names to ds's class ids. Throws
// TreeFormatError on malformed input, unknown classes, or out-of-range
// dimensions.
DecisionTree tree_from_json(const std::string& text, const Dataset& ds);

}  // namespace dtexact
