#include <algorithm>
#include <set>

#include "doctest.h"
#include "permutoria/enumerate.hpp"
#include "permutoria/permcore.hpp"

using namespace permutoria;

namespace {

Permutation perm(const char* s) { return Permutation::parse(s); }

bool contains_brute(const Permutation& s, const Permutation& t) {
  const int n = s.size(), k = t.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    int m = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx[m++] = i;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b) ok = (s.word[idx[a]] < s.word[idx[b]]) == (t.word[a] < t.word[b]);
    if (ok) return true;
  }
  return false;
}

// Insert a dot (new last column) or an empty row at site s, 0 = above row 1.
PartialPermutation insert_at(const PartialPermutation& p, int s, bool dot) {
  std::vector<std::pair<int, int>> d;
  for (auto [r, c] : p.dots()) d.push_back({r > s ? r + 1 : r, c});
  int cols = p.cols;
  if (dot) d.push_back({s + 1, ++cols});
  return PartialPermutation::from_dots(p.rows + 1, cols, d);
}

}  // namespace

TEST_CASE("contains_pattern examples") {
  const Permutation s = perm("7,9,3,8,1,10,5,6,2,4");
  CHECK(contains_pattern(s, perm("3214")));
  CHECK_FALSE(contains_pattern(s, perm("1234")));
  CHECK(contains_pattern(perm("2413"), perm("2413")));
  CHECK_FALSE(contains_pattern(identity_permutation(5), perm("321")));
}

TEST_CASE("contains_pattern agrees with subsequence search") {
  const std::vector<Permutation> pats = {perm("12"), perm("132"), perm("2413"), perm("3214"), perm("12345")};
  for (int n = 0; n <= 7; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
      Permutation s(w);
      for (const auto& t : pats) REQUIRE(contains_pattern(s, t) == contains_brute(s, t));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("avoids_all") {
  CHECK_FALSE(avoids_all(perm("2413"), parse_pattern_set("2413,3142")));
  CHECK(avoids_all(perm("1324"), parse_pattern_set("1234,2134")));
  CHECK(avoids_all(Permutation{}, parse_pattern_set("1,12")));
}

TEST_CASE("pattern sets are normalized") {
  PatternSet ts = parse_pattern_set("1234,123,321");
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == perm("123"));
  CHECK(ts[1] == perm("321"));
}

TEST_CASE("symmetries") {
  const Permutation s = perm("1342");
  CHECK(symmetry(s, Symmetry::reverse) == perm("2431"));
  CHECK(symmetry(s, Symmetry::complement) == perm("4213"));
  CHECK(symmetry(s, Symmetry::rotate180) == perm("3124"));
  CHECK(inverse(perm("3412")) == perm("3412"));
  const Permutation id = identity_permutation(4);
  CHECK(inverse(id) == id);
  CHECK(symmetry(id, Symmetry::rotate180) == id);
  CHECK(symmetry(id, Symmetry::reverse) == perm("4321"));
  for (const Permutation& p : enumerate_avoiders(6, {})) {
    for (Symmetry op : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse, Symmetry::rotate180})
      REQUIRE(symmetry(symmetry(p, op), op) == p);
    REQUIRE(symmetry(p, Symmetry::rotate180) == symmetry(symmetry(p, Symmetry::reverse), Symmetry::complement));
    REQUIRE(symmetry(p, Symmetry::rotate180) == symmetry(symmetry(p, Symmetry::complement), Symmetry::reverse));
  }
}

TEST_CASE("alternation and signatures") {
  CHECK(is_alternating(perm("27483615").word));
  CHECK(is_alternating({1, 2}));
  CHECK_FALSE(is_alternating({2, 1}));
  CHECK(signature({4, 1, 5, 5, 6, 2, 2}) == std::vector<int>{-1, 1, -1, 1, -1, -1});
  CHECK(is_alternating({2, 1}, Alternation::down_up));
}

TEST_CASE("doubly alternating") {
  CHECK(is_doubly_alternating(perm("7,9,3,8,1,10,5,6,2,4")));
  CHECK(is_doubly_alternating(perm("12")));
  CHECK(is_doubly_alternating(perm("132")));
  CHECK_FALSE(is_doubly_alternating(perm("27483615")));
  CHECK(is_doubly_alternating(Permutation{}));
  CHECK(enumerate_da(2, {}) == std::vector<Permutation>{perm("12")});
  CHECK(enumerate_da(3, {}) == std::vector<Permutation>{perm("132")});
}

TEST_CASE("Baxter") {
  CHECK(is_baxter(identity_permutation(6)));
  CHECK_FALSE(is_baxter(perm("2413")));
  CHECK_FALSE(is_baxter(perm("3142")));
  std::vector<Permutation> bax;
  for_each_da(6, {}, [&](const Permutation& s) {
    if (is_baxter(s)) bax.push_back(s);
  });
  CHECK(bax.size() == 5);
  CHECK(bax == enumerate_da(6, parse_pattern_set("2413")));
}

TEST_CASE("partial permutations") {
  PartialPermutation p = PartialPermutation::parse("3,_,_,2,6,5|6");
  CHECK(p.d() == 4);
  CHECK(p.c() == 2);
  CHECK(p.r() == 2);
  CHECK(p.str() == "3,_,_,2,6,5|6");
  CHECK(extendably_avoids(p, parse_pattern_set("123")));
  // Same dots, different frame: distinct objects.
  CHECK_FALSE(PartialPermutation(1, 0, {0}) == PartialPermutation(0, 1, {}));
  CHECK(extendably_avoids(PartialPermutation(2, 3, {0, 0}), parse_pattern_set("123")));
  CHECK_FALSE(extendably_avoids(PartialPermutation::from_permutation(perm("1243")), parse_pattern_set("123")));
}

TEST_CASE("parent rules") {
  // Rightmost dot (2,5) goes.
  CHECK(parent(PartialPermutation::from_permutation(perm("41523")), ParentRule::standard_extended) ==
        PartialPermutation::from_permutation(perm("4123")));
  CHECK(parent(PartialPermutation(1, 0, {0}), ParentRule::standard_extended).is_zero());
  PartialPermutation p = PartialPermutation::parse("2,1|3");
  PartialPermutation q = parent(p, ParentRule::standard_extended);
  CHECK(q.cols == 2);
  CHECK(q.dots() == p.dots());
  CHECK(parent(PartialPermutation::parse("_,1,_"), ParentRule::standard_extended) == PartialPermutation::parse("_,1"));
  CHECK(parent(PartialPermutation::parse("_,1,_"), ParentRule::alt_extended) == PartialPermutation::parse("1,_"));
  CHECK_THROWS_AS(parent(PartialPermutation(), ParentRule::standard_extended), Error);
}

TEST_CASE("children invert the parent rule") {
  const PatternSet ts = parse_pattern_set("132");
  CHECK(children(PartialPermutation(), ParentRule::standard, ts).size() == 1);
  for (ParentRule rule : {ParentRule::standard_extended, ParentRule::alt_extended}) {
    ExtensionOracle oracle(ts);
    std::vector<PartialPermutation> level{PartialPermutation()};
    for (int depth = 0; depth < 5; ++depth) {
      std::vector<PartialPermutation> next;
      for (const auto& p : level) {
        auto kids = children(p, rule, oracle);
        std::set<PartialPermutation> seen;
        for (const Child& c : kids) {
          REQUIRE(parent(c.node, rule) == p);
          REQUIRE(extendably_avoids(c.node, ts));
          REQUIRE(seen.insert(c.node).second);
          next.push_back(c.node);
        }
      }
      level = std::move(next);
    }
  }
}

TEST_CASE("active sites are r-active; an active bottom site makes rho c-active") {
  for (const char* p : {"123", "132", "213,4123", "231,1234"}) {
    const PatternSet ts = parse_pattern_set(p);
    for (int total = 0; total <= 5; ++total)
      for (int d = 0; d <= total; ++d)
        for (int c = 0; c + d <= total; ++c)
          for (const PartialPermutation& rho : enumerate_extended(d, c, total - d - c, ts))
            for (int s = 0; s <= rho.rows; ++s) {
              if (!extendably_avoids(insert_at(rho, s, true), ts)) continue;
              REQUIRE(extendably_avoids(insert_at(rho, s, false), ts));
              if (s == rho.rows) REQUIRE(extendably_avoids(PartialPermutation(rho.rows, rho.cols + 1, rho.col_of_row), ts));
            }
  }
}

TEST_CASE("transpose symmetry of extended counts") {
  for (const char* p : {"123", "132", "231", "231,4123"}) {
    const PatternSet ts = parse_pattern_set(p);
    const PatternSet inv = symmetry(ts, Symmetry::inverse);
    for (int d = 0; d <= 3; ++d)
      for (int c = 0; c <= 2; ++c)
        for (int r = 0; r <= 2; ++r) REQUIRE(count_extended(d, c, r, ts) == count_extended(d, r, c, inv));
  }
}
