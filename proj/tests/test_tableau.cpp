#include "doctest.h"
#include "permutoria/tableau.hpp"

using namespace permutoria;

TEST_CASE("partitions") {
  CHECK(parse_partition("5,4,3,1") == Partition{5, 4, 3, 1});
  CHECK(parse_partition("").empty());
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(conjugate({4, 4, 2, 1})) == Partition{4, 4, 2, 1});
  CHECK(contains({3, 2}, {2, 2}));
  CHECK_FALSE(contains({3, 2}, {1, 1, 1}));
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK_THROWS_AS(parse_partition("1,2"), Error);
}

TEST_CASE("skew shapes") {
  SkewShape s = SkewShape::make({3, 2, 1}, {2, 1});
  CHECK(s.size() == 3);
  CHECK_FALSE(s.is_partition_shaped());
  SkewShape r = s.rotated();
  CHECK(r.box == s.box);
  CHECK(r.rotated() == s);
  CHECK(r.size() == s.size());
  CHECK(SkewShape::straight({2, 2}, Box{3, 3}).rotated().inner == Partition{3, 1, 1});
}

TEST_CASE("reading words and the Yamanouchi condition") {
  SkewTableau row = parse_tableau("1,1,2");
  CHECK(reading_word(row) == std::vector<int>{2, 1, 1});
  CHECK_FALSE(is_yamanouchi({2, 1}));
  CHECK(is_yamanouchi({1, 2, 1, 3}));
  CHECK_FALSE(is_lr(row));
  SkewTableau can = canonical({2, 1});
  CHECK(can.str() == "1,1/2");
  CHECK(is_lr(can));
  CHECK(is_anti_lr(anti_canonical({2, 1})));
}

TEST_CASE("semistandardness is enforced") {
  CHECK_THROWS_AS(parse_tableau("2,1"), Error);
  CHECK_THROWS_AS(parse_tableau("1,2/1"), Error);
  CHECK_THROWS_AS(parse_tableau("1,4", 3), Error);
  CHECK_NOTHROW(parse_tableau(".,1/1"));
}

TEST_CASE("LR tableau counts") {
  CHECK(lr_list(SkewShape::make({2, 1}, {1}), {1, 1}).size() == 1);
  CHECK(lr_list(SkewShape::make({2, 1}, {1}), {2}).size() == 1);
  CHECK(lr_list(SkewShape::make({2, 1}, {2, 1}), {}).size() == 1);
  CHECK(lr_list(SkewShape::make({3, 2, 1}, {2, 1}), {2, 1}).size() == 2);
  for (const SkewTableau& t : lr_list(SkewShape::make({3, 2, 1}, {2, 1}), {2, 1})) {
    CHECK(is_lr(t));
    CHECK(t.orientation == Orientation::lr);
    CHECK(trim_partition(t.weight()) == Partition{2, 1});
  }
}

TEST_CASE("ssyt enumeration") {
  // Semistandard tableaux of shape (2,1) in 3 letters: 8.
  CHECK(ssyt_list(SkewShape::straight({2, 1}), 3).size() == 8);
  // Shape (1,1) in 3 letters: 3.
  CHECK(ssyt_list(SkewShape::straight({1, 1}), 3).size() == 3);
  std::size_t n = 0;
  enumerate_ssyt_weight(SkewShape::straight({2, 1}), {1, 1, 1}, [&](const SkewTableau&) { ++n; });
  CHECK(n == 2);
}

TEST_CASE("recording matrices") {
  SkewTableau t = parse_tableau(".,1,2/1,3", 3);
  Matrix m = recording_matrix(t);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<int>{1, 1, 0});
  CHECK(m[1] == std::vector<int>{1, 0, 1});
  CHECK(tableau_from_recording(t.shape, m, 3) == t);
  CHECK(transpose(transpose(m)) == m);
  CHECK(rotate180(rotate180(m)) == m);
}

TEST_CASE("rotation and the companion tableau") {
  for (const SkewTableau& t : ssyt_list(SkewShape::make({3, 2}, {1}), 3)) {
    SkewTableau b = with_boxes(t, Box{3, 3}, Box{3, 5});
    REQUIRE(rotate(rotate(b)).identical(b));
    REQUIRE(companion_tableau(companion_tableau(b)).identical(b));
    REQUIRE(rotate(b).shape == b.shape.rotated());
  }
}

TEST_CASE("json round trip") {
  SkewTableau t = with_boxes(parse_tableau(".,1,2/1,3", 3), Box{3, 4}, Box{3, 3});
  CHECK(tableau_from_json(tableau_to_json(t)).identical(t));
  SkewTableau l = lr_list(SkewShape::make({3, 2, 1}, {2, 1}), {2, 1}).front();
  SkewTableau back = tableau_from_json(tableau_to_json(l));
  CHECK(back.identical(l));
  CHECK(back.orientation == Orientation::lr);
  CHECK_THROWS_AS(tableau_from_json("{"), Error);
}
