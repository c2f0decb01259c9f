#include "dtexact/dataset.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dtexact {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Dataset Dataset::from_rows(std::vector<std::vector<Rational>> rows,
                           const std::vector<std::string>& labels,
                           const std::vector<int>* row_numbers) {
  if (rows.empty()) throw DatasetError("dataset has no examples");
  if (rows.size() != labels.size())
    throw DatasetError("row/label count mismatch");

  Dataset ds;
  ds.dims_ = static_cast<int>(rows.front().size());
  if (ds.dims_ < 1) throw DatasetError("dataset needs at least one dimension");

  std::map<std::string, ClassId> class_ids;
  ds.examples_.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != ds.dims_)
      throw DatasetError("row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].size()) + " coordinates, expected " +
                         std::to_string(ds.dims_));
    if (labels[i].empty())
      throw DatasetError("row " + std::to_string(i + 1) + " has an empty label");
    auto [it, inserted] = class_ids.emplace(labels[i], static_cast<ClassId>(ds.class_names_.size()));
    if (inserted) ds.class_names_.push_back(labels[i]);
    ds.examples_.push_back(Example{static_cast<int>(i), std::move(rows[i]), it->second});
  }

  // Conflicting duplicates: identical coordinates, different labels. No
  // consistent tree exists for them, so loading fails.
  std::vector<int> order(ds.examples_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ds.examples_[a].coords < ds.examples_[b].coords;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Example& prev = ds.examples_[order[i - 1]];
    const Example& cur = ds.examples_[order[i]];
    if (prev.coords == cur.coords && prev.label != cur.label) {
      int ra = row_numbers ? (*row_numbers)[prev.id] : prev.id + 1;
      int rb = row_numbers ? (*row_numbers)[cur.id] : cur.id + 1;
      throw DatasetError("conflicting duplicate examples: rows " +
                         std::to_string(std::min(ra, rb)) + " and " +
                         std::to_string(std::max(ra, rb)) +
                         " share coordinates but differ in label");
    }
  }

  ds.domains_.resize(ds.dims_);
  for (int dim = 0; dim < ds.dims_; ++dim) {
    std::vector<Rational> values;
    values.reserve(ds.examples_.size());
    for (const Example& e : ds.examples_) values.push_back(e.coords[dim]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    ds.domains_[dim] = std::move(values);
  }

  ds.ranks_.resize(ds.examples_.size() * ds.dims_);
  for (const Example& e : ds.examples_) {
    for (int dim = 0; dim < ds.dims_; ++dim) {
      const auto& dom = ds.domains_[dim];
      auto it = std::lower_bound(dom.begin(), dom.end(), e.coords[dim]);
      ds.ranks_[static_cast<std::size_t>(e.id) * ds.dims_ + dim] =
          static_cast<int>(it - dom.begin()) + 1;
    }
  }
  return ds;
}

Dataset Dataset::parse_csv(std::istream& in, bool has_header) {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> labels;
  std::vector<int> row_numbers;

  std::string line;
  int line_no = 0;
  int dims = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (has_header && line_no == 1) continue;
    if (trim(line).empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() < 2)
      throw DatasetError("line " + std::to_string(line_no) +
                         ": expected at least one coordinate and a label");
    if (dims == -1) dims = static_cast<int>(fields.size()) - 1;
    if (static_cast<int>(fields.size()) != dims + 1)
      throw DatasetError("line " + std::to_string(line_no) + ": has " +
                         std::to_string(fields.size()) + " fields, expected " +
                         std::to_string(dims + 1));
    std::vector<Rational> coords;
    coords.reserve(dims);
    for (int i = 0; i < dims; ++i) {
      auto q = parse_decimal(fields[i]);
      if (!q)
        throw DatasetError("line " + std::to_string(line_no) + ": bad numeric value '" +
                           fields[i] + "'");
      coords.push_back(std::move(*q));
    }
    if (fields.back().empty())
      throw DatasetError("line " + std::to_string(line_no) + ": empty label");
    rows.push_back(std::move(coords));
    labels.push_back(fields.back());
    row_numbers.push_back(line_no);
  }
  if (rows.empty()) throw DatasetError("no data rows");
  return from_rows(std::move(rows), labels, &row_numbers);
}

Dataset Dataset::parse_csv_text(std::string_view text, bool has_header) {
  std::istringstream in{std::string(text)};
  return parse_csv(in, has_header);
}

std::optional<ClassId> Dataset::class_by_name(std::string_view name) const {
  for (std::size_t c = 0; c < class_names_.size(); ++c)
    if (class_names_[c] == name) return static_cast<ClassId>(c);
  return std::nullopt;
}

bool Dataset::valid_split(SplitRef s) const {
  return s.dim >= 0 && s.dim < dims_ && s.pos >= 0 && s.pos <= domain_size(s.dim);
}

Rational Dataset::threshold_value(SplitRef s) const {
  const auto& dom = domains_[s.dim];
  if (s.pos == 0) return dom.front() - 1;
  if (s.pos == static_cast<int>(dom.size())) return dom.back();
  return (dom[s.pos - 1] + dom[s.pos]) / 2;
}

int Dataset::position_of_value(int dim, const Rational& v) const {
  const auto& dom = domains_[dim];
  auto it = std::upper_bound(dom.begin(), dom.end(), v);
  return static_cast<int>(it - dom.begin());
}

std::vector<int> Dataset::all_example_ids() const {
  std::vector<int> ids(examples_.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::pair<std::vector<int>, std::vector<int>> Dataset::partition(
    std::span<const int> subset, SplitRef s) const {
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int e : subset) {
    if (rank(e, s.dim) <= s.pos)
      out.first.push_back(e);
    else
      out.second.push_back(e);
  }
  return out;
}

std::optional<ClassId> Dataset::uniform_label(std::span<const int> subset) const {
  if (subset.empty()) return kAnyClass;
  ClassId first = label(subset.front());
  for (int e : subset)
    if (label(e) != first) return std::nullopt;
  return first;
}

void Dataset::serialize_csv(std::ostream& out) const {
  for (const Example& e : examples_) {
    for (const Rational& c : e.coords) out << to_decimal_string(c) << ",";
    out << class_names_[e.label] << "\n";
  }
}

std::string Dataset::to_csv() const {
  std::ostringstream out;
  serialize_csv(out);
  return out.str();
}

}  // namespace dtexact
