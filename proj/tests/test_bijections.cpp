#include <set>

#include "doctest.h"
#include "permutoria/bijections.hpp"
#include "permutoria/enumerate.hpp"

using namespace permutoria;

namespace {

Permutation perm(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_CASE("column readings") {
  StandardTableau t = {{1, 2, 4}, {3, 6}, {5}};
  CHECK(is_standard(t));
  CHECK(column_reading(t) == std::vector<int>{1, 2, 1, 3, 1, 2});
  CHECK(from_column_reading(column_reading(t)) == t);
  CHECK_THROWS_AS(from_column_reading({2}), Error);
  CHECK_FALSE(is_standard({{2, 1}}));
}

TEST_CASE("colpair") {
  CHECK(colpair({{1, 2}}) == std::vector<int>{1});
  CHECK(colpair_inv({1}) == StandardTableau{{1, 2}});
  CHECK(colpair_inv({1, 2, 1}) == StandardTableau{{1, 2, 4}, {3, 6}, {5}});
  CHECK(colpair({{1, 2, 4}, {3, 6}, {5}}) == std::vector<int>{1, 2, 1});
}

TEST_CASE("RSK on permutations") {
  auto [p, q] = rsk_permutation(perm("53412"));
  CHECK(p == StandardTableau{{1, 2}, {3, 4}, {5}});
  CHECK(q == StandardTableau{{1, 3}, {2, 5}, {4}});
  for (const Permutation& s : enumerate_avoiders(6, {})) {
    auto [a, b] = rsk_permutation(s);
    REQUIRE(rsk_permutation_inverse(a, b) == s);
  }
}

TEST_CASE("phi") {
  CHECK(phi(perm("1")) == perm("12"));
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> img;
    for (const Permutation& s : enumerate_avoiders(n, parse_pattern_set("1234"))) {
      Permutation t = phi(s);
      REQUIRE(is_doubly_alternating(t));
      REQUIRE(avoids_all(t, parse_pattern_set("1234")));
      REQUIRE(phi_inv(t) == s);
      img.insert(t);
    }
    CHECK(static_cast<Int>(img.size()) == count_da(2 * n, parse_pattern_set("1234")));
  }
}

TEST_CASE("theta") {
  CHECK(theta(perm("12")) == "UD");
  CHECK(theta(perm("3412")) == "UDUD");
  CHECK(theta(perm("1324")) == "UUDD");
  CHECK(is_dyck_path("UUDD"));
  CHECK_FALSE(is_dyck_path("UDDU"));
  CHECK(dyck_paths(4).size() == 14);
  for (const std::string& p : dyck_paths(5)) REQUIRE(theta(theta_inv(p)) == p);
}

TEST_CASE("active regions") {
  const std::vector<int> tau = parse_tau("34");
  CHECK(pattern_12tau(tau) == perm("1234"));
  CHECK(pattern_21tau(tau) == perm("2134"));
  ActiveRegion a = active_region(perm("7,9,3,8,1,10,5,6,2,4"), tau);
  CHECK(!a.lambda.empty());
  CHECK(a.parity_ok);
}

TEST_CASE("monotone placements") {
  CHECK(unique_monotone_placement({2, 2}, {1, 2}, {1, 2}, Monotone::increasing) == std::vector<Dot>{{1, 1}, {2, 2}});
  CHECK(unique_monotone_placement({2, 2}, {1, 2}, {1, 2}, Monotone::decreasing) == std::vector<Dot>{{1, 2}, {2, 1}});
  const std::vector<Dot> anti = {{1, 3}, {2, 2}, {3, 1}};
  CHECK(unique_monotone_placement({3, 2, 1}, {1, 2, 3}, {1, 2, 3}, Monotone::increasing) == anti);
  CHECK(unique_monotone_placement({3, 2, 1}, {1, 2, 3}, {1, 2, 3}, Monotone::decreasing) == anti);
  CHECK(unique_monotone_placement({3, 2, 1}, {}, {}, Monotone::increasing).empty());
  try {
    unique_monotone_placement({2}, {1, 2}, {1, 2}, Monotone::increasing);
    FAIL("expected NoPlacement");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_placement);
  }
  for (Monotone m : {Monotone::increasing, Monotone::decreasing}) {
    auto all = monotone_placements_exhaustive({4, 4, 3, 1}, {1, 2, 3}, {1, 2, 4}, m);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == unique_monotone_placement({4, 4, 3, 1}, {1, 2, 3}, {1, 2, 4}, m));
  }
}

TEST_CASE("psi") {
  const std::vector<int> tau = parse_tau("34");
  CHECK(psi(perm("1324"), tau) == perm("1324"));
  const PatternSet from = parse_pattern_set("1234"), to = parse_pattern_set("2134");
  std::set<Permutation> img;
  for (const Permutation& s : enumerate_da(8, from)) {
    Permutation t = psi(s, tau);
    REQUIRE(is_doubly_alternating(t));
    REQUIRE(avoids_all(t, to));
    REQUIRE(psi_inv(t, tau) == s);
    img.insert(t);
  }
  CHECK(static_cast<Int>(img.size()) == count_da(8, to));
}
