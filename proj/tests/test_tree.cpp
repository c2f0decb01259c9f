#include <doctest.h>

#include "dtexact/dp_solver.hpp"
#include "dtexact/tree.hpp"
#include "dtexact/tree_json.hpp"
#include "test_data.hpp"

using namespace dtexact;

TEST_CASE("classify walks thresholds") {
  Dataset pair = testdata::pair_1d();
  DecisionTree leaf = DecisionTree::leaf(0);
  CHECK(classify(leaf, pair, std::vector<Rational>{Rational(42)}) == 0);

  DecisionTree stump =
      DecisionTree::cut(SplitRef{0, 1}, DecisionTree::leaf(0), DecisionTree::leaf(1));
  CHECK(classify(stump, pair, std::vector<Rational>{Rational(1)}) == 0);
  CHECK(classify(stump, pair, std::vector<Rational>{Rational(2)}) == 1);

  Dataset xo = testdata::xor_2x2();
  DecisionTree tree = testdata::xor_witness();
  CHECK(classify(tree, xo, std::vector<Rational>{Rational(0), Rational(0)}) == 0);
  CHECK(classify(tree, xo, std::vector<Rational>{Rational(0), Rational(1)}) == 1);
}

TEST_CASE("validate checks every example") {
  CHECK(validate(DecisionTree::leaf(0), testdata::uniform_1d()));
  CHECK_FALSE(validate(DecisionTree::leaf(0), testdata::pair_1d()));
  CHECK(validate(testdata::xor_witness(), testdata::xor_2x2()));
}

TEST_CASE("tree_stats counts size, leaves, essential nodes") {
  Dataset uni = testdata::uniform_1d();
  TreeStats st = tree_stats(DecisionTree::leaf(0), uni, 0);
  CHECK(st.size == 0);
  CHECK(st.essential_count == 0);
  CHECK(st.max_nonessential_run == 0);
  CHECK(st.leaves_per_class == std::vector<int>{1});

  Dataset xo = testdata::xor_2x2();
  TreeStats xs = tree_stats(testdata::xor_witness(), xo, 0);
  CHECK(xs.size == 3);
  CHECK(xs.leaves_per_class == std::vector<int>{2, 2});
  CHECK(xs.essential_count == 1);  // only the root has red leaves on both sides
  CHECK(xs.max_nonessential_run == 1);

  Dataset pair = testdata::pair_1d();
  DecisionTree stump =
      DecisionTree::cut(SplitRef{0, 1}, DecisionTree::leaf(0), DecisionTree::leaf(1));
  TreeStats ps = tree_stats(stump, pair, 0);
  CHECK(ps.size == 1);
  CHECK(ps.essential_count == 0);  // a single red leaf cannot sit on both sides
}

TEST_CASE("leaf example sets partition the dataset") {
  for (int index = 0; index < 24; ++index) {
    Dataset ds = testdata::corpus_instance(index);
    DecisionTree tree = dp_min_size(ds).witness;
    auto sets = leaf_example_sets(tree, ds);
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    CHECK(total == static_cast<std::size_t>(ds.size()));
  }
}

TEST_CASE("minimum trees satisfy the essential-node bounds") {
  // Structural bounds on dp witnesses: at most R-1 essential nodes for R
  // red leaves, and non-essential runs of length at most 2d.
  int checked = 0;
  for (int index = 0; index < 200; ++index) {
    Dataset ds = testdata::corpus_instance(index);
    if (ds.classes() != 2) continue;
    DecisionTree tree = dp_min_size(ds).witness;
    for (ClassId red = 0; red < 2; ++red) {
      TreeStats st = tree_stats(tree, ds, red);
      int leaves = st.leaves_per_class[red];
      if (leaves >= 1)
        CHECK(st.essential_count <= leaves - 1);
      else
        CHECK(st.essential_count == 0);
      CHECK(st.max_nonessential_run <= 2 * ds.dims());
    }
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("tree json round-trip") {
  Dataset xo = testdata::xor_2x2();
  DecisionTree tree = testdata::xor_witness();
  std::string json = tree_to_json(tree, xo);
  CHECK(json.find("\"thr\": \"0.5\"") != std::string::npos);
  DecisionTree back = tree_from_json(json, xo);
  CHECK(back == tree);
  CHECK(tree_to_json(back, xo) == json);
}

TEST_CASE("tree json rejects bad input") {
  Dataset xo = testdata::xor_2x2();
  CHECK_THROWS_AS(tree_from_json("{", xo), TreeFormatError);
  CHECK_THROWS_AS(tree_from_json(R"({"class":"nope"})", xo), TreeFormatError);
  CHECK_THROWS_AS(tree_from_json(R"({"dim":5,"thr":"0.5","le":{"class":"r"},"gt":{"class":"b"}})", xo),
                  TreeFormatError);
  CHECK_THROWS_AS(tree_from_json(R"({"dim":1,"thr":"x","le":{"class":"r"},"gt":{"class":"b"}})", xo),
                  TreeFormatError);
}
