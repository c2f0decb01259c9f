#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtexact/rational.hpp"

namespace dtexact {

using ClassId = std::int32_t;

// Returned by uniform_label for an empty subset: any class label works.
inline constexpr ClassId kAnyClass = -1;

struct Example {
  int id = 0;
  std::vector<Rational> coords;
  ClassId label = 0;
};

// A combinatorial cut position in one dimension. pos = p means the cut is
// placed right after the p-th smallest domain value: p = 0 puts every
// example on the ">" side (the -inf sentinel), p = |D_dim| puts every
// example on the "<=" side (the +inf sentinel).
struct SplitRef {
  int dim = 0;
  int pos = 0;
  friend bool operator==(const SplitRef&, const SplitRef&) = default;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable labeled point set with per-dimension sorted domains and 1-based
// rank indices. Solver logic is purely combinatorial on ranks; rational
// coordinates are touched only when parsing, serializing, or classifying
// points that are not dataset examples. Safe to share across threads once
// constructed.
class Dataset {
 public:
  // labels are mapped to ClassId in first-appearance order. Throws
  // DatasetError on conflicting duplicate coordinates; row_numbers, when
  // given, are used in that error message (otherwise 1-based row indices).
  static Dataset from_rows(std::vector<std::vector<Rational>> rows,
                           const std::vector<std::string>& labels,
                           const std::vector<int>* row_numbers = nullptr);

  // CSV: d numeric columns then one label token, comma separated, LF or
  // CRLF. has_header skips the first line.
  static Dataset parse_csv(std::istream& in, bool has_header);
  static Dataset parse_csv_text(std::string_view text, bool has_header);

  int dims() const { return dims_; }
  int classes() const { return static_cast<int>(class_names_.size()); }
  int size() const { return static_cast<int>(examples_.size()); }
  const Example& example(int e) const { return examples_[e]; }
  ClassId label(int e) const { return examples_[e].label; }
  const std::string& class_name(ClassId c) const { return class_names_[c]; }
  std::optional<ClassId> class_by_name(std::string_view name) const;

  const std::vector<Rational>& domain(int dim) const { return domains_[dim]; }
  int domain_size(int dim) const { return static_cast<int>(domains_[dim].size()); }
  // 1-based index of example e's coordinate within domain(dim).
  int rank(int e, int dim) const { return ranks_[static_cast<std::size_t>(e) * dims_ + dim]; }

  // Number of combinatorially distinct cut positions {0, ..., |D_dim|}.
  int split_count(int dim) const { return domain_size(dim) + 1; }
  bool valid_split(SplitRef s) const;
  // Materialized numeric threshold: midpoint between adjacent domain values,
  // the largest value for pos = |D_dim|, and smallest value - 1 for pos = 0.
  Rational threshold_value(SplitRef s) const;
  // Largest pos whose threshold is <= v; equivalently the number of domain
  // values in dimension dim that are <= v.
  int position_of_value(int dim, const Rational& v) const;

  std::vector<int> all_example_ids() const;
  // Splits subset into the (<=, >) sides of s, preserving input order.
  std::pair<std::vector<int>, std::vector<int>> partition(
      std::span<const int> subset, SplitRef s) const;
  // Common label of the subset, kAnyClass if the subset is empty, nullopt if
  // two labels occur.
  std::optional<ClassId> uniform_label(std::span<const int> subset) const;

  void serialize_csv(std::ostream& out) const;
  std::string to_csv() const;

 private:
  Dataset() = default;

  int dims_ = 0;
  std::vector<std::string> class_names_;
  std::vector<Example> examples_;
  std::vector<std::vector<Rational>> domains_;
  std::vector<int> ranks_;  // examples x dims, row-major, 1-based values
};

}  // namespace dtexact
