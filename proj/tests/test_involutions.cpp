#include <random>

#include "doctest.h"
#include "permutoria/involutions.hpp"

using namespace permutoria;

TEST_CASE("jeu de taquin") {
  SkewTableau t = parse_tableau(".,2/1,3");
  CHECK(jdt(t).str() == "1,2/3");
  CHECK(inner_corners(t) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK_THROWS_AS(jdt_slide(t, 1, 1), Error);
  std::mt19937_64 rng(7);
  SkewTableau u = parse_tableau(".,.,1/.,2/3");
  for (int i = 0; i < 10; ++i) CHECK(jdt_random(u, rng) == jdt(u));
}

TEST_CASE("Bender-Knuth") {
  CHECK(bender_knuth(parse_tableau("1,1/2"), 1).str() == "1,2/2");
  SkewTableau t = parse_tableau("1,1,2,3/2,3", 3);
  for (int i = 1; i <= 2; ++i) CHECK(bender_knuth(bender_knuth(t, i), i) == t);
  CHECK(bk_z(3) == BKWord{1, 2, 1});
  CHECK(apply_bk_word(t, {}) == t);
}

TEST_CASE("Schuetzenberger involution") {
  CHECK(schuetzenberger(canonical({2, 1})).str() == "1,2/2");
  for (const SkewTableau& t : ssyt_list(SkewShape::straight({3, 1}), 3)) {
    REQUIRE(schuetzenberger(schuetzenberger(t)) == t);
    REQUIRE(schuetzenberger(t) == evacuation(t));
  }
}

TEST_CASE("RSK of matrices") {
  // Permutation matrix of 53412: row i has its one in column sigma(i).
  const std::vector<int> w = {5, 3, 4, 1, 2};
  IntMatrix m(5, std::vector<std::int64_t>(5, 0));
  for (int i = 0; i < 5; ++i) m[i][w[i] - 1] = 1;
  TableauPair pq = rsk_matrix(m);
  CHECK(pq.P.str() == "1,2/3,4/5");
  CHECK(pq.Q.str() == "1,3/2,5/4");
  CHECK(rsk_matrix_inverse(pq.P, pq.Q) == m);
  TableauPair z = rsk_matrix(IntMatrix(2, std::vector<std::int64_t>(2, 0)));
  CHECK(z.P.size() == 0);
  CHECK(z.Q.size() == 0);
}

TEST_CASE("switching") {
  // Empty inner tableau: switching is a no-op.
  SkewTableau t = parse_tableau("1,2/3");
  SkewTableau empty = make_tableau(SkewShape::straight({}), {}, 0);
  auto [t1, s1] = tableau_switch(empty, t);
  CHECK(t1 == t);
  CHECK(s1.size() == 0);
  SkewTableau in = parse_tableau("1");
  SkewTableau out = parse_tableau(".,1/1", 1);
  auto a = tableau_switch(in, out);
  auto b = tableau_switch_slides(in, out);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
  CHECK(a.first.size() == 2);
  CHECK(a.second.size() == 1);
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({2, 2}, {1}, {2}) == 0);
  for (const Partition& l : partitions_of(5))
    for (const Partition& m : partitions_of(5)) CHECK(lr_coefficient(l, m, {}) == (l == m ? 1 : 0));
  CHECK(schur_product_check({1}, {1}, 3));
  CHECK(schur_product_check({2, 1}, {1, 1}, 3));
}

TEST_CASE("orientation and the symmetry map") {
  SkewTableau row = parse_tableau("1,2/2");
  CHECK_FALSE(orient(row, Orientation::lr).has_value());
  auto l = orient(canonical({2, 1}), Orientation::lr);
  REQUIRE(l.has_value());
  SkewTableau r = rho(*l);
  CHECK(rho(r).identical(*l));
  // A tableau flagged LR that is not LR is rejected.
  SkewTableau bad = row;
  bad.orientation = Orientation::lr;
  try {
    rho(bad);
    FAIL("expected NotLR");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_lr);
  }
}

TEST_CASE("dual equivalence") {
  SkewTableau a = parse_tableau("1,2/3", 3), b = parse_tableau("1,3/2", 3);
  CHECK(dual_equivalent(a, b));
  CHECK(jdt_equivalent(a, a));
  CHECK_FALSE(jdt_equivalent(a, b));
  CHECK_THROWS_AS(dual_equivalent(a, parse_tableau("1,2,3")), Error);
}
