#include "permutoria/gengraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace permutoria {

TreeExplorer::TreeExplorer(PatternSet ts, ParentRule rule) : rule_(rule), oracle_(std::move(ts)) {}

const std::vector<Child>& TreeExplorer::children(const PartialPermutation& rho) {
  auto it = kids_.find(rho);
  if (it != kids_.end()) return it->second;
  return kids_.emplace(rho, permutoria::children(rho, rule_, oracle_)).first->second;
}

std::int64_t TreeExplorer::fingerprint(const PartialPermutation& rho, int depth) {
  if (depth <= 0) return 0;
  {
    auto it = fps_.find(rho);
    if (it != fps_.end() && static_cast<int>(it->second.size()) > depth && it->second[static_cast<std::size_t>(depth)] >= 0)
      return it->second[static_cast<std::size_t>(depth)];
  }
  std::vector<std::pair<int, std::int64_t>> key;
  for (const Child& ch : children(rho)) key.emplace_back(static_cast<int>(ch.kind), fingerprint(ch.node, depth - 1));
  std::sort(key.begin(), key.end());
  auto [pos, fresh] = fp_ids_.emplace(std::move(key), static_cast<std::int64_t>(fp_ids_.size()) + 1);
  (void)fresh;
  auto& slot = fps_[rho];
  if (static_cast<int>(slot.size()) <= depth) slot.resize(static_cast<std::size_t>(depth) + 1, -1);
  slot[static_cast<std::size_t>(depth)] = pos->second;
  return pos->second;
}

std::vector<std::size_t> LabeledTree::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

LabeledTree build_tree(const PatternSet& ts, ParentRule rule, int depth) {
  check_limit(depth, Limits::get().tree, "tree depth");
  TreeExplorer ex(ts, rule);
  LabeledTree tree;
  tree.levels.push_back({TreeNode{ex.root(), -1, EdgeKind::dot}});
  for (int l = 0; l < depth; ++l) {
    std::vector<TreeNode> next;
    const auto& cur = tree.levels.back();
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (const Child& ch : ex.children(cur[i].node)) next.push_back({ch.node, static_cast<int>(i), ch.kind});
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

// ---------------------------------------------------------------------------

bool GeneratingGraph::closed() const {
  return std::none_of(classes.begin(), classes.end(), [](const GraphClass& c) { return c.frontier; });
}

std::vector<GraphEdge> GeneratingGraph::out_edges(int cls) const {
  auto lo = std::lower_bound(edges.begin(), edges.end(), cls, [](const GraphEdge& e, int c) { return e.from < c; });
  std::vector<GraphEdge> out;
  for (; lo != edges.end() && lo->from == cls; ++lo) out.push_back(*lo);
  return out;
}

Int GeneratingGraph::weight(int from, EdgeKind kind, int to) const {
  for (const GraphEdge& e : out_edges(from))
    if (e.kind == kind && e.to == to) return e.weight;
  return 0;
}

namespace {

using EdgeKey = std::tuple<int, int, int>;  // from, kind, to

void finish_graph(GeneratingGraph& g, const std::map<EdgeKey, Int>& weights, TreeExplorer& ex) {
  g.edges.clear();
  for (const auto& [key, w] : weights) {
    auto [from, kind, to] = key;
    g.edges.push_back({from, to, static_cast<EdgeKind>(kind), w});
  }
  // names: index = number of row children (extended) or children (standard)
  std::map<std::pair<char, int>, int> seen;
  for (GraphClass& c : g.classes) {
    int index = 0;
    for (const Child& ch : ex.children(c.rep))
      if (!is_extended(g.rule) || ch.kind == EdgeKind::row) ++index;
    const char prefix = c.rep.r() > 0 ? 'r' : 'a';
    const int ord = seen[{prefix, index}]++;
    std::string name;
    if (prefix == 'r') {
      name = "r" + std::to_string(index) + std::string(static_cast<std::size_t>(ord), '\'');
    } else {
      static const std::string letters = "abcdefghijklmnopq";
      name = ord < static_cast<int>(letters.size()) ? std::string(1, letters[static_cast<std::size_t>(ord)])
                                                    : "x" + std::to_string(ord) + "_";
      name += std::to_string(index);
    }
    c.name = name;
  }
}

}  // namespace

DiscoveryReport discover(TreeExplorer& ex, int n, int t, DiscoveryMode mode) {
  check_limit(n + t, Limits::get().tree + 6, "discovery depth");
  DiscoveryReport rep;
  GeneratingGraph& g = rep.graph;
  g.patterns = ex.patterns();
  g.rule = ex.rule();
  g.depth_n = n;
  g.depth_t = t;
  std::map<EdgeKey, Int> weights;

  auto class_for = [&](const PartialPermutation& node, int depth, bool& created) {
    const std::int64_t f = ex.fingerprint(node, t);
    auto it = g.class_of_fingerprint.find(f);
    created = it == g.class_of_fingerprint.end();
    if (!created) return it->second;
    const int id = static_cast<int>(g.classes.size());
    g.classes.push_back({id, "", node, depth, false, f});
    g.class_of_fingerprint.emplace(f, id);
    return id;
  };

  bool created = false;
  g.root = class_for(ex.root(), 0, created);

  if (mode == DiscoveryMode::recursive) {
    std::deque<int> queue{g.root};
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      ++rep.nodes_examined;
      if (g.classes[static_cast<std::size_t>(c)].depth >= n) {
        g.classes[static_cast<std::size_t>(c)].frontier = true;
        continue;
      }
      const PartialPermutation node = g.classes[static_cast<std::size_t>(c)].rep;
      const int depth = g.classes[static_cast<std::size_t>(c)].depth;
      for (const Child& ch : ex.children(node)) {
        const int to = class_for(ch.node, depth + 1, created);
        if (created) queue.push_back(to);
        weights[{c, static_cast<int>(ch.kind), to}] += 1;
      }
    }
  } else {
    // Every node down to depth n is classified; the first expanded member of
    // a class fixes its edges and later members are compared with it.
    std::vector<std::map<std::pair<int, int>, Int>> profile;
    std::vector<char> expanded;
    std::vector<PartialPermutation> level{ex.root()};
    for (int depth = 0; depth <= n; ++depth) {
      std::vector<PartialPermutation> next;
      for (const PartialPermutation& node : level) {
        ++rep.nodes_examined;
        const int c = class_for(node, depth, created);
        profile.resize(g.classes.size());
        expanded.resize(g.classes.size(), 0);
        if (depth == n) continue;
        std::map<std::pair<int, int>, Int> mine;
        for (const Child& ch : ex.children(node)) {
          const int to = class_for(ch.node, depth + 1, created);
          mine[{static_cast<int>(ch.kind), to}] += 1;
          next.push_back(ch.node);
        }
        profile.resize(g.classes.size());
        expanded.resize(g.classes.size(), 0);
        if (!expanded[static_cast<std::size_t>(c)]) {
          expanded[static_cast<std::size_t>(c)] = 1;
          profile[static_cast<std::size_t>(c)] = mine;
          g.classes[static_cast<std::size_t>(c)].rep = node;
          g.classes[static_cast<std::size_t>(c)].depth = depth;
          for (const auto& [kt, w] : mine) weights[{c, kt.first, kt.second}] = w;
        } else if (profile[static_cast<std::size_t>(c)] != mine) {
          ++rep.inconsistencies;
        }
      }
      level = std::move(next);
    }
    for (std::size_t c = 0; c < g.classes.size(); ++c) g.classes[c].frontier = !expanded[c];
  }
  finish_graph(g, weights, ex);
  return rep;
}

GeneratingGraph discover_graph(const PatternSet& ts, ParentRule rule, int n, int t, DiscoveryMode mode) {
  TreeExplorer ex(ts, rule);
  return discover(ex, n, t, mode).graph;
}

std::optional<int> classify(TreeExplorer& ex, const GeneratingGraph& g, const PartialPermutation& rho) {
  auto it = g.class_of_fingerprint.find(ex.fingerprint(rho, g.depth_t));
  if (it == g.class_of_fingerprint.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

std::vector<WalkEdge> DiscoveredWalkGraph::out_edges(std::int64_t cls) const {
  std::vector<WalkEdge> out;
  for (const GraphEdge& e : g_.out_edges(static_cast<int>(cls))) out.push_back({e.kind, e.to, e.weight});
  return out;
}

std::vector<WalkEdge> CatalanWalkGraph::out_edges(std::int64_t cls) const {
  std::vector<WalkEdge> out;
  for (std::int64_t j = 2; j <= cls + 1; ++j) out.push_back({EdgeKind::dot, j, 1});
  return out;
}

MultiSeries walk_series(const WalkGraph& g, Orders o) {
  const int max_total = o.x + o.y + o.z;
  MultiSeries total = MultiSeries::constant(1, o);
  std::map<std::int64_t, MultiSeries> cur;
  cur.emplace(g.root(), MultiSeries::constant(1, o));
  for (int step = 1; step <= max_total && !cur.empty(); ++step) {
    std::map<std::int64_t, MultiSeries> next;
    for (const auto& [cls, s] : cur) {
      for (const WalkEdge& e : g.out_edges(cls)) {
        MultiSeries add = s.shifted(edge_kind_letter(e.kind)[0]).scaled(e.weight);
        if (add.is_zero()) continue;
        auto it = next.find(e.to);
        if (it == next.end()) next.emplace(e.to, std::move(add));
        else it->second = it->second + add;
      }
    }
    for (const auto& [cls, s] : next) total = total + s;
    cur = std::move(next);
  }
  return total;
}

MultiSeries walk_series(const GeneratingGraph& g, Orders o) { return walk_series(DiscoveredWalkGraph(g), o); }

MultiSeries brute_series(const PatternSet& ts, ParentRule rule, Orders o, int max_total) {
  MultiSeries s(o);
  if (rule == ParentRule::standard) {
    for (int n = 0; n <= std::min(o.x, max_total); ++n) s.set(n, 0, 0, count_avoiders(n, ts));
    return s;
  }
  for (const auto& [key, v] : extended_table(max_total, ts)) {
    auto [d, c, r] = key;
    if (s.in_range(d, c, r)) s.set(d, c, r, v);
  }
  return s;
}

Discrepancy compare_series(const MultiSeries& expected, const MultiSeries& actual, int max_total) {
  Discrepancy d;
  if (first_difference(expected, actual, max_total, d.cell)) {
    d.ok = false;
    d.expected = expected.get(d.cell.i, d.cell.j, d.cell.k);
    d.actual = actual.get(d.cell.i, d.cell.j, d.cell.k);
  }
  return d;
}

Discrepancy validate_graph(const GeneratingGraph& g, int horizon) {
  const Orders o = is_extended(g.rule) ? Orders{horizon, horizon, horizon} : Orders{horizon, 0, 0};
  return compare_series(brute_series(g.patterns, g.rule, o, horizon), walk_series(g, o), horizon);
}

// ---------------------------------------------------------------------------

namespace {

struct Adjacency {
  std::vector<std::vector<GraphEdge>> out, in;
  std::map<EdgeKey, Int> w;

  explicit Adjacency(const GeneratingGraph& g) : out(g.classes.size()), in(g.classes.size()) {
    for (const GraphEdge& e : g.edges) {
      out[static_cast<std::size_t>(e.from)].push_back(e);
      in[static_cast<std::size_t>(e.to)].push_back(e);
      w[{e.from, static_cast<int>(e.kind), e.to}] = e.weight;
    }
  }
  Int weight(int from, int kind, int to) const {
    auto it = w.find({from, kind, to});
    return it == w.end() ? 0 : it->second;
  }
};

// Joint colour refinement of both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const GeneratingGraph& g1, const Adjacency& a1,
                                                     const GeneratingGraph& g2, const Adjacency& a2) {
  using Sig = std::vector<std::int64_t>;
  auto initial = [](const GeneratingGraph& g, const Adjacency& a, std::size_t c) {
    Sig s{g.classes[c].frontier ? 1 : 0, static_cast<int>(c) == g.root ? 1 : 0};
    std::vector<std::pair<int, Int>> o, i;
    for (const auto& e : a.out[c]) o.emplace_back(static_cast<int>(e.kind), e.weight);
    for (const auto& e : a.in[c]) i.emplace_back(static_cast<int>(e.kind), e.weight);
    std::sort(o.begin(), o.end());
    std::sort(i.begin(), i.end());
    s.push_back(-1);
    for (auto& p : o) s.insert(s.end(), {p.first, p.second});
    s.push_back(-2);
    for (auto& p : i) s.insert(s.end(), {p.first, p.second});
    return s;
  };
  std::vector<int> c1(g1.classes.size()), c2(g2.classes.size());
  auto assign = [&](auto&& sig1, auto&& sig2) {
    std::map<Sig, int> ids;
    std::vector<Sig> s1, s2;
    for (std::size_t c = 0; c < c1.size(); ++c) s1.push_back(sig1(c));
    for (std::size_t c = 0; c < c2.size(); ++c) s2.push_back(sig2(c));
    for (auto& s : s1) ids.emplace(s, 0);
    for (auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t c = 0; c < c1.size(); ++c) c1[c] = ids[s1[c]];
    for (std::size_t c = 0; c < c2.size(); ++c) c2[c] = ids[s2[c]];
    return next;
  };
  int count = assign([&](std::size_t c) { return initial(g1, a1, c); }, [&](std::size_t c) { return initial(g2, a2, c); });
  for (;;) {
    auto step = [](const Adjacency& a, const std::vector<int>& col, std::size_t c) {
      Sig s{col[c]};
      std::vector<std::tuple<int, Int, int>> o, i;
      for (const auto& e : a.out[c]) o.emplace_back(static_cast<int>(e.kind), e.weight, col[static_cast<std::size_t>(e.to)]);
      for (const auto& e : a.in[c]) i.emplace_back(static_cast<int>(e.kind), e.weight, col[static_cast<std::size_t>(e.from)]);
      std::sort(o.begin(), o.end());
      std::sort(i.begin(), i.end());
      s.push_back(-1);
      for (auto& [k, w, t] : o) s.insert(s.end(), {k, w, t});
      s.push_back(-2);
      for (auto& [k, w, t] : i) s.insert(s.end(), {k, w, t});
      return s;
    };
    const std::vector<int> old1 = c1, old2 = c2;
    const int next = assign([&](std::size_t c) { return step(a1, old1, c); }, [&](std::size_t c) { return step(a2, old2, c); });
    if (next == count) break;
    count = next;
  }
  return {c1, c2};
}

}  // namespace

bool graph_isomorphic(const GeneratingGraph& g1, const GeneratingGraph& g2, std::vector<int>* mapping) {
  const std::size_t n = g1.classes.size();
  if (n != g2.classes.size() || g1.edges.size() != g2.edges.size()) return false;
  if (n == 0) return true;
  const Adjacency a1(g1), a2(g2);
  auto [col1, col2] = refine(g1, a1, g2, a2);
  {
    auto h1 = col1, h2 = col2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;
  }
  if (col1[static_cast<std::size_t>(g1.root)] != col2[static_cast<std::size_t>(g2.root)]) return false;

  // BFS order of g1 with a tree parent for each class
  std::vector<int> order, via(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(g1.root);
  seen[static_cast<std::size_t>(g1.root)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& e : a1.out[static_cast<std::size_t>(order[i])])
      if (!seen[static_cast<std::size_t>(e.to)]) {
        seen[static_cast<std::size_t>(e.to)] = 1;
        via[static_cast<std::size_t>(e.to)] = order[i];
        order.push_back(e.to);
      }
  if (order.size() != n) return false;

  std::vector<int> map(n, -1), back(n, -1);
  auto consistent = [&](int u, int v) {
    for (const auto& e : a1.out[static_cast<std::size_t>(u)]) {
      const int m = e.to == u ? v : map[static_cast<std::size_t>(e.to)];
      if (m >= 0 && a2.weight(v, static_cast<int>(e.kind), m) != e.weight) return false;
    }
    for (const auto& e : a1.in[static_cast<std::size_t>(u)]) {
      const int m = map[static_cast<std::size_t>(e.from)];
      if (m >= 0 && a2.weight(m, static_cast<int>(e.kind), v) != e.weight) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    const int u = order[i];
    std::vector<int> cand;
    if (i == 0) {
      cand.push_back(g2.root);
    } else {
      for (const auto& e : a2.out[static_cast<std::size_t>(map[static_cast<std::size_t>(via[static_cast<std::size_t>(u)])])])
        if (std::find(cand.begin(), cand.end(), e.to) == cand.end()) cand.push_back(e.to);
    }
    for (int v : cand) {
      if (back[static_cast<std::size_t>(v)] >= 0 || col1[static_cast<std::size_t>(u)] != col2[static_cast<std::size_t>(v)]) continue;
      if (!consistent(u, v)) continue;
      map[static_cast<std::size_t>(u)] = v;
      back[static_cast<std::size_t>(v)] = u;
      if (go(i + 1)) return true;
      map[static_cast<std::size_t>(u)] = -1;
      back[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!go(0)) return false;
  if (mapping) *mapping = map;
  return true;
}

EquivalenceResult graph_equivalent(const PatternSet& a, const PatternSet& b, int n, int t) {
  EquivalenceResult res;
  const ParentRule rules[] = {ParentRule::standard_extended, ParentRule::alt_extended};
  std::map<int, GeneratingGraph> ga, gb;
  for (ParentRule r : rules) {
    ga.emplace(static_cast<int>(r), discover_graph(a, r, n, t));
    gb.emplace(static_cast<int>(r), discover_graph(b, r, n, t));
  }
  for (ParentRule r1 : rules)
    for (ParentRule r2 : rules) {
      const auto& g1 = ga.at(static_cast<int>(r1));
      const auto& g2 = gb.at(static_cast<int>(r2));
      if (graph_isomorphic(g1, g2)) {
        res.equivalent = true;
        res.rule1 = r1;
        res.rule2 = r2;
        res.classes1 = g1.classes.size();
        res.classes2 = g2.classes.size();
        return res;
      }
    }
  res.classes1 = ga.at(static_cast<int>(rules[0])).classes.size();
  res.classes2 = gb.at(static_cast<int>(rules[0])).classes.size();
  return res;
}

// ---------------------------------------------------------------------------

Walk walk_encode(TreeExplorer& ex, const GeneratingGraph& g, const PartialPermutation& rho) {
  std::vector<PartialPermutation> chain{rho};
  while (!chain.back().is_zero()) chain.push_back(parent(chain.back(), g.rule));
  std::reverse(chain.begin(), chain.end());
  Walk w;
  int cls = g.root;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& kids = ex.children(chain[i]);
    auto hit = std::find_if(kids.begin(), kids.end(), [&](const Child& c) { return c.node == chain[i + 1]; });
    if (hit == kids.end()) fail(Errc::invalid_walk, chain[i + 1].str() + " does not avoid the patterns");
    const auto to = classify(ex, g, hit->node);
    if (!to) fail(Errc::invalid_walk, "no class for " + hit->node.str());
    int ordinal = 0;
    for (auto it = kids.begin(); it != hit; ++it)
      if (it->kind == hit->kind && classify(ex, g, it->node) == to) ++ordinal;
    if (g.weight(cls, hit->kind, *to) <= ordinal) fail(Errc::invalid_walk, "graph lacks the edge used by " + hit->node.str());
    w.push_back({hit->kind, *to, ordinal});
    cls = *to;
  }
  return w;
}

PartialPermutation walk_decode(TreeExplorer& ex, const GeneratingGraph& g, const Walk& w) {
  PartialPermutation node = ex.root();
  int cls = g.root;
  for (const WalkStep& s : w) {
    if (s.to < 0 || s.to >= static_cast<int>(g.classes.size()) || g.weight(cls, s.kind, s.to) <= s.ordinal || s.ordinal < 0)
      fail(Errc::invalid_walk, "walk leaves the graph at " + walk_str({s}));
    int seen = 0;
    bool found = false;
    for (const Child& ch : ex.children(node)) {
      if (ch.kind != s.kind || classify(ex, g, ch.node) != s.to) continue;
      if (seen++ == s.ordinal) {
        node = ch.node;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::invalid_walk, "no child realizes step " + walk_str({s}));
    cls = s.to;
  }
  return node;
}

std::string walk_str(const Walk& w) {
  std::string out;
  for (const WalkStep& s : w) {
    if (!out.empty()) out += ' ';
    out += edge_kind_letter(s.kind);
    out += std::to_string(s.to);
    if (s.ordinal) out += "." + std::to_string(s.ordinal);
  }
  return out;
}

PartialPermutation transport(TreeExplorer& e1, const GeneratingGraph& g1, TreeExplorer& e2, const GeneratingGraph& g2,
                             const std::vector<int>& mapping, const PartialPermutation& rho) {
  Walk w = walk_encode(e1, g1, rho);
  for (WalkStep& s : w) s.to = mapping.at(static_cast<std::size_t>(s.to));
  return walk_decode(e2, g2, w);
}

// ---------------------------------------------------------------------------

LadderReport check_row_ladder(const GeneratingGraph& g) {
  LadderReport rep;
  auto zcount = [&](int c) {
    Int k = 0;
    for (const auto& e : g.out_edges(c))
      if (e.kind == EdgeKind::row) k += e.weight;
    return k;
  };
  std::map<Int, int> by_count;
  for (const GraphClass& c : g.classes) {
    if (c.rep.r() == 0 || c.frontier) continue;
    const Int k = zcount(c.id);
    auto [it, fresh] = by_count.emplace(k, c.id);
    if (!fresh) {
      rep.ok = false;
      rep.detail = "classes " + g.classes[static_cast<std::size_t>(it->second)].name + " and " + c.name +
                   " both have " + std::to_string(k) + " row children";
      return rep;
    }
    std::vector<Int> targets;
    for (const auto& e : g.out_edges(c.id)) {
      const GraphClass& t = g.classes[static_cast<std::size_t>(e.to)];
      if (e.kind != EdgeKind::row || t.rep.r() == 0) {
        rep.ok = false;
        rep.detail = "class " + c.name + " leaves the dotted part";
        return rep;
      }
      if (t.frontier) {
        targets.clear();
        break;
      }
      for (Int m = 0; m < e.weight; ++m) targets.push_back(zcount(e.to));
    }
    if (targets.empty() && k > 0) continue;  // reaches the frontier
    std::sort(targets.begin(), targets.end());
    std::vector<Int> want;
    for (Int j = 1; j <= k; ++j) want.push_back(j);
    if (targets != want) {
      rep.ok = false;
      rep.detail = "class " + c.name + " is not a ladder step";
      return rep;
    }
  }
  return rep;
}

bool rows_independent(const PatternSet& ts) {
  int up = 0, down = 0;
  for (const Permutation& t : ts) {
    const int n = t.size();
    if (n < 2) return false;
    int pos_n = 0, pos_m = 0;
    for (int i = 1; i <= n; ++i) {
      if (t(i) == n) pos_n = i;
      if (t(i) == n - 1) pos_m = i;
    }
    (pos_m < pos_n ? up : down)++;
  }
  return up == 0 || down == 0;
}

// ---------------------------------------------------------------------------

Gadget parse_gadget(const std::string& text) {
  if (text == "2.8") return Gadget::lemma_2_8;
  if (text == "2.9") return Gadget::lemma_2_9;
  if (text == "2.10") return Gadget::lemma_2_10;
  fail(Errc::parse_error, "unknown lemma '" + text + "'");
}

std::pair<MultiSeries, MultiSeries> lemma_walk_series(Gadget lemma, int k, const std::vector<MultiSeries>& feeders,
                                                      int order) {
  if (k < 1) fail(Errc::invalid_argument, "k must be positive");
  const Orders o{order, 0, 0};
  const int feeds = static_cast<int>(feeders.size());
  auto f = [&](int j) { return j >= 1 && j <= feeds ? feeders[static_cast<std::size_t>(j - 1)] : MultiSeries(o); };
  const MultiSeries x = MultiSeries::variable('x', o);
  const MultiSeries one = MultiSeries::constant(1, o);

  // DP: each sweep extends the walks by one step.
  const int m = std::max(feeds, k) + order + 2;
  std::vector<MultiSeries> b(static_cast<std::size_t>(m) + 2, MultiSeries(o));
  std::vector<MultiSeries> fsuffix(static_cast<std::size_t>(m) + 2, MultiSeries(o));
  for (int i = m; i >= 1; --i) fsuffix[static_cast<std::size_t>(i)] = fsuffix[static_cast<std::size_t>(i) + 1] + f(i);
  for (int sweep = 0; sweep <= order; ++sweep) {
    std::vector<MultiSeries> bsuffix(static_cast<std::size_t>(m) + 2, MultiSeries(o));
    for (int i = m; i >= 1; --i) bsuffix[static_cast<std::size_t>(i)] = bsuffix[static_cast<std::size_t>(i) + 1] + b[static_cast<std::size_t>(i)];
    std::vector<MultiSeries> nb(b.size(), MultiSeries(o));
    for (int i = 1; i <= m; ++i) {
      MultiSeries in(o);
      switch (lemma) {
        case Gadget::lemma_2_8: in = fsuffix[static_cast<std::size_t>(i)] + bsuffix[static_cast<std::size_t>(i)]; break;
        case Gadget::lemma_2_9: in = f(i) + bsuffix[static_cast<std::size_t>(i)]; break;
        case Gadget::lemma_2_10: in = fsuffix[static_cast<std::size_t>(i)] + bsuffix[static_cast<std::size_t>(std::max(1, i - 1))]; break;
      }
      nb[static_cast<std::size_t>(i)] = x * in;
    }
    b = std::move(nb);
  }

  MultiSeries closed(o);
  const MultiSeries inv = (one - x).inverse();
  switch (lemma) {
    case Gadget::lemma_2_8: {
      MultiSeries p = one;
      for (int j = 0; k + j <= feeds; ++j, p = p * inv) closed = closed + f(k + j) * p;
      closed = x * inv * closed;
      break;
    }
    case Gadget::lemma_2_9: {
      MultiSeries sum(o), p = one;
      for (int i = 0; i + k + 1 <= feeds; ++i, p = p * inv) sum = sum + f(i + k + 1) * p;
      const MultiSeries q = x * inv;
      closed = q * f(k) + q * q * sum;
      break;
    }
    case Gadget::lemma_2_10: {
      const MultiSeries c = MultiSeries::catalan_of(x);
      const MultiSeries xc = x * c;
      for (int mm = 0; mm <= k - 1; ++mm) {
        MultiSeries sum(o), p = one;
        for (int i = 0; k + i - mm <= feeds; ++i, p = p * c) sum = sum + f(k + i - mm) * p;
        closed = closed + xc.pow(mm + 1) * sum;
      }
      break;
    }
  }
  return {b[static_cast<std::size_t>(k)], closed};
}

bool lemma_walk_check(Gadget lemma, int k, const std::vector<MultiSeries>& feeders, int order) {
  auto [dp, closed] = lemma_walk_series(lemma, k, feeders, order);
  return dp == closed;
}

// ---------------------------------------------------------------------------

std::string graph_to_dot(const GeneratingGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const GraphClass& c : g.classes) {
    os << "  n" << c.id << " [label=\"" << c.name << "\"";
    if (c.id == g.root) os << ", shape=doublecircle";
    if (c.frontier) os << ", style=dashed";
    os << "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    static const char* styles[] = {"solid", "dashed", "dotted"};
    os << "  n" << e.from << " -> n" << e.to << " [style=" << styles[static_cast<int>(e.kind)];
    if (e.weight > 1) os << ", label=\"" << e.weight << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const GeneratingGraph& g) {
  nlohmann::ordered_json j;
  j["patterns"] = pattern_set_str(g.patterns);
  j["rule"] = rule_name(g.rule);
  j["depthN"] = g.depth_n;
  j["depthT"] = g.depth_t;
  j["root"] = g.root;
  auto classes = nlohmann::ordered_json::array();
  for (const GraphClass& c : g.classes)
    classes.push_back({{"id", c.id}, {"name", c.name}, {"rep", c.rep.str()}, {"depth", c.depth}, {"frontier", c.frontier}});
  j["classes"] = classes;
  auto edges = nlohmann::ordered_json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", edge_kind_letter(e.kind)}, {"weight", e.weight}});
  j["edges"] = edges;
  return j.dump(2);
}

}  // namespace permutoria
