#include <set>

#include "doctest.h"
#include "permutoria/gengraph.hpp"

using namespace permutoria;

namespace {

PatternSet P(const char* s) { return parse_pattern_set(s); }

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("level sizes of generating trees") {
  CHECK(build_tree(P("123"), ParentRule::standard, 4).level_sizes() == sizes({1, 1, 2, 5, 14}));
  CHECK(build_tree(P("213,4123"), ParentRule::standard, 4).level_sizes() == sizes({1, 1, 2, 5, 13}));
  LabeledTree t = build_tree(P("132"), ParentRule::standard, 5);
  for (std::size_t l = 1; l < t.levels.size(); ++l)
    for (const TreeNode& n : t.levels[l]) {
      REQUIRE(n.parent >= 0);
      REQUIRE(parent(n.node, ParentRule::standard) == t.levels[l - 1][static_cast<std::size_t>(n.parent)].node);
    }
}

TEST_CASE("series arithmetic") {
  const Orders o{6, 2, 2};
  MultiSeries geo = expand_rational("1/(1-x)", o);
  for (int i = 0; i <= 6; ++i) CHECK(geo.get(i, 0, 0) == 1);
  CHECK(geo.get(0, 1, 0) == 0);
  MultiSeries c = expand_rational("c(x)", o);
  CHECK(c.x_coefficients() == std::vector<Int>{1, 1, 2, 5, 14, 42, 132});
  CHECK(c == MultiSeries::constant(1, o) + c.pow(2).shifted('x'));
  CHECK((geo * (MultiSeries::constant(1, o) - MultiSeries::variable('x', o))) == MultiSeries::constant(1, o));
  MultiSeries yz = expand_rational("y/(1-z)", o);
  CHECK(yz.swap_yz() == expand_rational("z/(1-y)", o));
  CHECK(parse_orders("6,4,4") == Orders{6, 4, 4});
  CHECK(parse_orders("6") == Orders{6, 0, 0});
}

TEST_CASE("expressions round trip through text") {
  for (const char* f : {"c(x)/((1-y*c(x))*(1-z*c(x)))", "(1-2x)/(1-3x+x^2)", "1/((1-y)(1-z)-x)", "-x+y*z^2"}) {
    ExprPtr e = parse_expr(f);
    REQUIRE(expand(parse_expr(expr_to_string(e)), Orders{5, 3, 3}) == expand(e, Orders{5, 3, 3}));
  }
}

TEST_CASE("non-unit divisors are rejected") {
  try {
    expand_rational("1/(2-x)", Orders{4, 0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_unit_divisor);
  }
  CHECK_THROWS_AS(parse_expr("1/(1-"), Error);
}

TEST_CASE("Catalan walk graph") {
  MultiSeries s = walk_series(CatalanWalkGraph(), Orders{8, 0, 0});
  for (int n = 0; n <= 8; ++n) CHECK(s.get(n, 0, 0) == catalan(n));
  // Discovered to depth 7: only the class first seen at depth 7 is a frontier,
  // so walks of length <= 7 are exact.
  GeneratingGraph g = discover_graph(P("123"), ParentRule::standard, 7, 4);
  CHECK_FALSE(g.closed());
  MultiSeries d = walk_series(g, Orders{7, 0, 0});
  for (int n = 0; n <= 7; ++n) CHECK(d.get(n, 0, 0) == catalan(n));
}

TEST_CASE("discovered graph of {213,4123}") {
  GeneratingGraph g = discover_graph(P("213,4123"), ParentRule::standard, 7, 4);
  CHECK(g.closed());
  CHECK(g.classes.size() == 3);
  MultiSeries s = walk_series(g, Orders{9, 0, 0});
  for (int n = 0; n <= 9; ++n) CHECK(s.get(n, 0, 0) == count_avoiders(n, P("213,4123")));
}

TEST_CASE("brute series matches extended counts") {
  const PatternSet ts = P("123");
  MultiSeries b = brute_series(ts, ParentRule::standard_extended, Orders{3, 3, 3}, 4);
  CHECK(b.get(1, 1, 0) == 2);
  for (int d = 0; d <= 3; ++d)
    for (int c = 0; c <= 3; ++c)
      for (int r = 0; r <= 3; ++r) {
        if (d + c + r > 4) REQUIRE(b.get(d, c, r) == 0);
        else REQUIRE(b.get(d, c, r) == count_extended(d, c, r, ts));
      }
}

TEST_CASE("validate_graph catches a perturbed edge") {
  GeneratingGraph g = discover_graph(P("213,4123"), ParentRule::standard_extended, 7, 4);
  REQUIRE(g.closed());
  CHECK(validate_graph(g, 6).ok);
  REQUIRE(!g.edges.empty());
  GeneratingGraph bad = g;
  for (GraphEdge& e : bad.edges)
    if (e.from == bad.root) {
      e.weight += 1;
      break;
    }
  Discrepancy d = validate_graph(bad, 6);
  CHECK_FALSE(d.ok);
  CHECK(d.expected != d.actual);
}

TEST_CASE("graph isomorphism and equivalence") {
  GeneratingGraph cat = discover_graph(P("123"), ParentRule::standard, 7, 4);
  GeneratingGraph fib = discover_graph(P("213,4123"), ParentRule::standard, 7, 4);
  CHECK(graph_isomorphic(cat, cat));
  CHECK_FALSE(graph_isomorphic(cat, fib));
  CHECK(graph_equivalent(P("123"), P("213"), 7, 4).equivalent);
  CHECK(graph_equivalent(P("132"), P("312"), 7, 4).equivalent);
  CHECK_FALSE(graph_equivalent(P("123"), P("132"), 7, 4).equivalent);
}

TEST_CASE("walk encoding round trip") {
  for (ParentRule rule : {ParentRule::standard, ParentRule::standard_extended}) {
    TreeExplorer ex(P("213,4123"), rule);
    GeneratingGraph g = discover(ex, 7, 4).graph;
    REQUIRE(g.closed());
    LabeledTree t = build_tree(P("213,4123"), rule, 5);
    for (const auto& level : t.levels)
      for (const TreeNode& n : level) {
        Walk w = walk_encode(ex, g, n.node);
        REQUIRE(walk_decode(ex, g, w) == n.node);
      }
  }
  TreeExplorer ex(P("123"), ParentRule::standard);
  GeneratingGraph g = discover(ex, 7, 4).graph;
  CHECK_THROWS_AS(walk_decode(ex, g, Walk{WalkStep{EdgeKind::dot, 0, 99}}), Error);
}

TEST_CASE("transport along an isomorphism is a bijection") {
  TreeExplorer e1(P("123"), ParentRule::standard), e2(P("132"), ParentRule::standard);
  GeneratingGraph g1 = discover(e1, 7, 4).graph, g2 = discover(e2, 7, 4).graph;
  std::vector<int> mapping;
  REQUIRE(graph_isomorphic(g1, g2, &mapping));
  std::set<std::string> images;
  const LabeledTree tree = build_tree(P("123"), ParentRule::standard, 6);
  for (const TreeNode& n : tree.levels[6]) {
    PartialPermutation img = transport(e1, g1, e2, g2, mapping, n.node);
    REQUIRE(avoids_all(img.dot_pattern(), P("132")));
    images.insert(img.str());
  }
  CHECK(images.size() == 132);
}

TEST_CASE("row independence") {
  CHECK(rows_independent(P("123")));
  CHECK(rows_independent(P("132")));
  CHECK_FALSE(rows_independent(P("123,132")));
}

TEST_CASE("gadget walks") {
  const int order = 8;
  const Orders o{order, 0, 0};
  for (Gadget g : {Gadget::lemma_2_8, Gadget::lemma_2_9, Gadget::lemma_2_10}) {
    std::vector<MultiSeries> zero(6, MultiSeries(o));
    std::vector<MultiSeries> impulse(6, MultiSeries(o));
    impulse[0] = MultiSeries::constant(1, o);
    for (int k = 1; k <= 3; ++k) {
      CHECK(lemma_walk_check(g, k, zero, order));
      CHECK(lemma_walk_check(g, k, impulse, order));
      auto [dp, closed] = lemma_walk_series(g, k, zero, order);
      CHECK(dp.is_zero());
    }
  }
  CHECK(parse_gadget("2.9") == Gadget::lemma_2_9);
  CHECK_THROWS_AS(parse_gadget("2.11"), Error);
}

TEST_CASE("graph output formats") {
  GeneratingGraph g = discover_graph(P("213,4123"), ParentRule::standard, 7, 4);
  CHECK(graph_to_dot(g).rfind("digraph", 0) == 0);
  CHECK(graph_to_json(g).find("\"classes\"") != std::string::npos);
}
