#include <doctest.h>

#include <set>

#include "dtexact/dataset.hpp"
#include "test_data.hpp"

using namespace dtexact;

TEST_CASE("parse_csv builds domains and ranks") {
  Dataset ds = Dataset::parse_csv_text("1,red\n2,blue\n", false);
  CHECK(ds.dims() == 1);
  CHECK(ds.classes() == 2);
  CHECK(ds.size() == 2);
  CHECK(ds.domain(0) == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(ds.class_name(0) == "red");
  CHECK(ds.class_name(1) == "blue");
  CHECK(ds.rank(0, 0) == 1);
  CHECK(ds.rank(1, 0) == 2);

  Dataset xo = Dataset::parse_csv_text("0,0,r\n1,1,r\n0,1,b\n1,0,b\n", false);
  CHECK(xo.dims() == 2);
  CHECK(xo.classes() == 2);
  CHECK(xo.domain_size(0) == 2);
  CHECK(xo.domain_size(1) == 2);
}

TEST_CASE("parse_csv rejects conflicting duplicates with both rows") {
  CHECK_THROWS_WITH_AS(Dataset::parse_csv_text("1,red\n1,blue\n", false),
                       doctest::Contains("rows 1 and 2"), DatasetError);
  // Duplicates with matching labels are kept.
  Dataset ds = Dataset::parse_csv_text("1,red\n1,red\n2,blue\n", false);
  CHECK(ds.size() == 3);
  CHECK(ds.domain_size(0) == 2);
}

TEST_CASE("parse_csv error paths") {
  CHECK_THROWS_AS(Dataset::parse_csv_text("1,2,red\n1,blue\n", false), DatasetError);
  CHECK_THROWS_AS(Dataset::parse_csv_text("x,red\n", false), DatasetError);
  CHECK_THROWS_AS(Dataset::parse_csv_text("", false), DatasetError);
  CHECK_THROWS_AS(Dataset::parse_csv_text("1,\n", false), DatasetError);
  // Header handling and CRLF.
  Dataset ds = Dataset::parse_csv_text("x,label\r\n1,red\r\n2,blue\r\n", true);
  CHECK(ds.size() == 2);
}

TEST_CASE("split_count is the domain size plus one") {
  CHECK(testdata::pair_1d().split_count(0) == 3);
  CHECK(Dataset::parse_csv_text("5,only\n", false).split_count(0) == 2);
  CHECK(testdata::xor_2x2().split_count(1) == 3);
}

TEST_CASE("partition matches the rank rule") {
  Dataset pair = testdata::pair_1d();
  auto [l0, r0] = pair.partition(pair.all_example_ids(), SplitRef{0, 1});
  CHECK(l0 == std::vector<int>{0});
  CHECK(r0 == std::vector<int>{1});

  auto [l1, r1] = pair.partition(pair.all_example_ids(), SplitRef{0, 0});
  CHECK(l1.empty());
  CHECK(r1.size() == 2);

  Dataset xo = Dataset::parse_csv_text("0,0,r\n1,1,r\n0,1,b\n1,0,b\n", false);
  auto [lx, rx] = xo.partition(xo.all_example_ids(), SplitRef{0, 1});
  CHECK(lx == std::vector<int>{0, 2});  // the x = 0 column
  CHECK(rx == std::vector<int>{1, 3});
}

TEST_CASE("uniform_label") {
  Dataset uni = testdata::uniform_1d();
  CHECK(*uni.uniform_label(uni.all_example_ids()) == 0);
  CHECK(*uni.uniform_label(std::vector<int>{}) == kAnyClass);
  Dataset xo = testdata::xor_2x2();
  CHECK_FALSE(xo.uniform_label(xo.all_example_ids()).has_value());
}

TEST_CASE("partitions are disjoint covers for every split") {
  for (int index = 0; index < 24; ++index) {
    Dataset ds = testdata::corpus_instance(index);
    auto all = ds.all_example_ids();
    for (int dim = 0; dim < ds.dims(); ++dim) {
      for (int pos = 0; pos <= ds.domain_size(dim); ++pos) {
        auto [le, gt] = ds.partition(all, SplitRef{dim, pos});
        CHECK(le.size() + gt.size() == all.size());
        std::set<int> seen(le.begin(), le.end());
        for (int e : gt) CHECK(seen.insert(e).second);
      }
    }
  }
}

TEST_CASE("monotone per-dimension transforms preserve the combinatorics") {
  for (int index = 0; index < 12; ++index) {
    Dataset ds = testdata::corpus_instance(index);
    std::vector<std::vector<Rational>> rows;
    std::vector<std::string> labels;
    for (int e = 0; e < ds.size(); ++e) {
      std::vector<Rational> row;
      for (const Rational& c : ds.example(e).coords) row.push_back(c * 2 + 7);
      rows.push_back(std::move(row));
      labels.push_back(ds.class_name(ds.label(e)));
    }
    Dataset mapped = Dataset::from_rows(std::move(rows), labels);

    auto all = ds.all_example_ids();
    for (int dim = 0; dim < ds.dims(); ++dim) {
      CHECK(ds.split_count(dim) == mapped.split_count(dim));
      for (int e = 0; e < ds.size(); ++e) CHECK(ds.rank(e, dim) == mapped.rank(e, dim));
      for (int pos = 0; pos <= ds.domain_size(dim); ++pos)
        CHECK(ds.partition(all, SplitRef{dim, pos}) ==
              mapped.partition(all, SplitRef{dim, pos}));
    }
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (int index = 0; index < 12; ++index) {
    Dataset ds = testdata::corpus_instance(index);
    Dataset back = Dataset::parse_csv_text(ds.to_csv(), false);
    REQUIRE(back.size() == ds.size());
    REQUIRE(back.dims() == ds.dims());
    CHECK(back.classes() == ds.classes());
    for (int e = 0; e < ds.size(); ++e) {
      CHECK(back.example(e).coords == ds.example(e).coords);
      CHECK(back.class_name(back.label(e)) == ds.class_name(ds.label(e)));
    }
    CHECK(back.to_csv() == ds.to_csv());
  }
}

TEST_CASE("threshold materialization") {
  Dataset pair = testdata::pair_1d();  // domain 1, 2
  CHECK(pair.threshold_value(SplitRef{0, 0}) == Rational(0));   // below all
  CHECK(pair.threshold_value(SplitRef{0, 1}) == Rational(3, 2));
  CHECK(pair.threshold_value(SplitRef{0, 2}) == Rational(2));   // top sentinel
  CHECK(pair.position_of_value(0, Rational(3, 2)) == 1);
  CHECK(pair.position_of_value(0, Rational(2)) == 2);
  CHECK(pair.position_of_value(0, Rational(0)) == 0);
}
