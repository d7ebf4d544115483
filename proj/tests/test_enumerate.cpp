#include <algorithm>

#include "doctest.h"
#include "permutoria/enumerate.hpp"
#include "permutoria/series.hpp"

using namespace permutoria;

namespace {

PatternSet P(const char* s) { return parse_pattern_set(s); }

Int binom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_avoiders") {
  CHECK(enumerate_avoiders(4, P("123")).size() == 14);
  auto e = enumerate_avoiders(0, P("123"));
  REQUIRE(e.size() == 1);
  CHECK(e[0].size() == 0);
  CHECK(enumerate_avoiders(5, P("1234")).size() == 103);
  auto v = enumerate_avoiders(5, P("132"));
  CHECK(std::is_sorted(v.begin(), v.end()));
  CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
}

TEST_CASE("count_avoiders") {
  CHECK(count_avoiders(7, P("1234")) == 2761);
  CHECK(count_avoiders(7, P("1324")) == 2762);
  CHECK(count_avoiders(7, P("1342")) == 2740);
  CHECK(count_avoiders(7, P("1342")) == count_avoiders(7, P("2413")));
  // Worker count does not change the answer.
  CHECK(count_avoiders(8, P("1324"), 3) == 15793);
  CHECK_THROWS_AS(count_avoiders(Limits::get().size + 1, P("123")), Error);
}

TEST_CASE("S_n(213,4123) against the even Fibonacci generating function") {
  // Brute force gives 89 at n = 6; (1-2x)/(1-3x+x^2) has the same coefficient.
  auto gf = expand_rational("(1-2*x)/(1-3*x+x^2)", Orders{8, 0, 0}).x_coefficients();
  for (int n = 0; n <= 8; ++n) CHECK(count_avoiders(n, P("213,4123")) == gf[n]);
  CHECK(count_avoiders(6, P("213,4123")) == 89);
  CHECK(count_avoiders(6, P("213,4123")) == fibonacci(11));
}

TEST_CASE("Wilf symmetry classes") {
  for (const char* p : {"132", "1342", "2413,3142", "123,2143"}) {
    const PatternSet ts = P(p);
    for (int n = 0; n <= 8; ++n) {
      const Int c = count_avoiders(n, ts);
      for (Symmetry op : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse}) REQUIRE(count_avoiders(n, symmetry(ts, op)) == c);
    }
  }
}

TEST_CASE("count_da") {
  const std::vector<Int> da = {1, 1, 1, 2, 3, 8, 19, 64};
  for (int n = 1; n <= 8; ++n) CHECK(count_da(n, {}) == da[n - 1]);
  CHECK(count_da(4, P("321")) == 2);
  CHECK(count_da(5, P("321")) == 1);
  CHECK(count_da(10, P("2413")) == 42);
}

TEST_CASE("count_da against filtering S_n") {
  for (int n = 1; n <= 9; ++n) {
    Int brute = 0;
    for_each_avoider(n, {}, [&](const Permutation& s) { brute += is_doubly_alternating(s); });
    REQUIRE(count_da(n, {}) == brute);
  }
}

TEST_CASE("DA counting agrees with filtering all permutations") {
  for (int n = 1; n <= 8; ++n) {
    Int brute = 0;
    for_each_avoider(n, P("1234"), [&](const Permutation& s) { brute += is_doubly_alternating(s); });
    REQUIRE(count_da(n, P("1234")) == brute);
  }
}

TEST_CASE("length-3 patterns on DA permutations") {
  for (int n = 1; n <= 12; ++n) {
    for (const char* p : {"123", "213", "231", "312"}) CHECK(count_da(n, P(p)) == 1);
    CHECK(count_da(n, P("132")) == ((n % 2 == 0 || n == 1) ? 1 : 0));
    CHECK(count_da(n, P("321")) == 1 + ((n % 2 == 0 && n >= 4) ? 1 : 0));
  }
}

TEST_CASE("DA_n(1234,2413) follows Fibonacci on even sizes") {
  // F indexed from F_0 = F_1 = 1: standard F_{m+1} at size 2m.
  for (int m = 1; 2 * m <= 14; ++m) CHECK(count_da(2 * m, P("1234,2413")) == fibonacci(m + 1));
  const std::vector<Int> odd = {1, 1, 2, 1, 1, 1};  // n = 1, 3, ..., 11
  for (int n = 1; n <= 11; n += 2) CHECK(count_da(n, P("1234,2413")) == odd[(n - 1) / 2]);
}

TEST_CASE("DA_2n(2143) = DA_2n+1(3412) = DA_2n+2(3412)") {
  for (int n = 1; 2 * n + 2 <= 12; ++n) {
    CHECK(count_da(2 * n, P("2143")) == count_da(2 * n + 1, P("3412")));
    CHECK(count_da(2 * n + 1, P("3412")) == count_da(2 * n + 2, P("3412")));
  }
}

TEST_CASE("count_extended") {
  CHECK(count_extended(1, 1, 0, P("123")) == 2);
  CHECK(count_extended(0, 3, 2, P("123")) == 1);
  CHECK(count_extended(0, 2, 2, P("2413,3142")) == 1);
  CHECK(count_extended(1, 1, 0, P("132")) == binom(3, 1) - binom(3, 0));
  auto t = extended_table(5, P("123"));
  for (const auto& [k, v] : t) {
    auto [d, c, r] = k;
    REQUIRE(count_extended(d, c, r, P("123")) == v);
  }
}

TEST_CASE("sequences") {
  const std::vector<Int> cat = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n < 7; ++n) CHECK(catalan(n) == cat[n]);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(12) == 144);
  CHECK(fibonacci(-2) == -1);
  // Alternating (up-down) permutations against the Euler numbers.
  for (int n = 1; n <= 9; ++n) {
    Int alt = 0;
    for_each_avoider(n, {}, [&](const Permutation& s) { alt += is_alternating(s.word); });
    REQUIRE(sequence(Sequence::euler, n) == alt);
  }
  for (int n = 0; n <= 20; ++n) {
    const Int diff = catalan(n + 4) - 4 * catalan(n + 3) + 6 * catalan(n + 2) - 4 * catalan(n + 1) + catalan(n);
    REQUIRE(sequence(Sequence::catalan_diff_4, n) == diff);
    REQUIRE(catalan_diff4_closed(n) == diff);
  }
}

TEST_CASE("conjecture reports") {
  ConjectureReport a = conjecture_report("P1-7.1", 12);
  CHECK(a.all_match());
  ConjectureReport b = conjecture_report("P1-8.2", 12);
  for (const ConjectureRow& r : b.rows)
    if (r.n % 2 == 0) CHECK(r.match);
  ConjectureReport c = conjecture_report("P1-8.3", 12);
  for (const ConjectureRow& r : c.rows)
    if (r.n % 2 == 0) CHECK(r.match);
  CHECK_THROWS_AS(conjecture_report("P1-9.9", 4), Error);
}
