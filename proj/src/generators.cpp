#include "dtexact/generators.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtexact {

Dataset make_xor_grid(int grid) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> labels;
  for (int x = 0; x < grid; ++x) {
    for (int y = 0; y < grid; ++y) {
      rows.push_back({Rational(x), Rational(y)});
      labels.push_back((x + y) % 2 == 0 ? "r" : "b");
    }
  }
  return Dataset::from_rows(std::move(rows), labels);
}

Dataset make_random_dataset(std::uint64_t seed, int n, int d, int k,
                            int coord_max) {
  if (n < 1 || d < 1 || k < 1 || coord_max < 0)
    throw std::invalid_argument("bad random dataset parameters");

  SplitMix64 rng(seed);
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> labels;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> coords(d);
    for (int& c : coords) c = static_cast<int>(rng.below(coord_max + 1));
    int label = static_cast<int>(rng.below(k));
    auto [it, inserted] = seen.emplace(coords, label);
    if (!inserted) label = it->second;

    std::vector<Rational> row;
    row.reserve(d);
    for (int c : coords) row.emplace_back(c);
    rows.push_back(std::move(row));
    labels.push_back("c" + std::to_string(label + 1));
  }
  return Dataset::from_rows(std::move(rows), labels);
}

}  // namespace dtexact
