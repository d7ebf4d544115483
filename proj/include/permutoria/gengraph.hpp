#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permutoria/enumerate.hpp"
#include "permutoria/permcore.hpp"
#include "permutoria/series.hpp"

namespace permutoria {

// Generating tree of extendably avoiding objects with memoized children and
// interned subtree fingerprints. Fingerprint 0 stands for a subtree cut at
// depth 0; any other id names the sorted list of (edge kind, child
// fingerprint one level shallower).
class TreeExplorer {
 public:
  TreeExplorer(PatternSet ts, ParentRule rule);

  const PatternSet& patterns() const { return oracle_.patterns(); }
  ParentRule rule() const { return rule_; }

  const std::vector<Child>& children(const PartialPermutation& rho);
  std::int64_t fingerprint(const PartialPermutation& rho, int depth);
  std::size_t fingerprint_count() const { return fp_ids_.size(); }

  PartialPermutation root() const { return PartialPermutation(); }

 private:
  ParentRule rule_;
  ExtensionOracle oracle_;
  std::unordered_map<PartialPermutation, std::vector<Child>, PartialPermutationHash> kids_;
  std::unordered_map<PartialPermutation, std::vector<std::int64_t>, PartialPermutationHash> fps_;
  std::map<std::vector<std::pair<int, std::int64_t>>, std::int64_t> fp_ids_;
};

struct TreeNode {
  PartialPermutation node;
  int parent = -1;  // index into the previous level
  EdgeKind kind = EdgeKind::dot;
};

// Level l holds the objects at distance l from the root, parents before
// children, siblings in canonical order.
struct LabeledTree {
  std::vector<std::vector<TreeNode>> levels;
  std::vector<std::size_t> level_sizes() const;
};

LabeledTree build_tree(const PatternSet& ts, ParentRule rule, int depth);

struct GraphEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::dot;
  Int weight = 1;
};

struct GraphClass {
  int id = 0;
  std::string name;
  PartialPermutation rep;
  int depth = 0;          // depth of the representative
  bool frontier = false;  // representative was not expanded
  std::int64_t fingerprint = 0;
};

struct GeneratingGraph {
  PatternSet patterns;
  ParentRule rule = ParentRule::standard;
  int depth_n = 0;
  int depth_t = 0;
  int root = 0;
  std::vector<GraphClass> classes;
  std::vector<GraphEdge> edges;  // merged, sorted by (from, kind, to)
  std::map<std::int64_t, int> class_of_fingerprint;

  bool closed() const;  // every class was expanded
  std::vector<GraphEdge> out_edges(int cls) const;
  Int weight(int from, EdgeKind kind, int to) const;
};

enum class DiscoveryMode { recursive, naive };

struct DiscoveryReport {
  GeneratingGraph graph;
  std::size_t inconsistencies = 0;  // naive mode: class members whose children disagree
  std::size_t nodes_examined = 0;
};

DiscoveryReport discover(TreeExplorer& explorer, int n, int t, DiscoveryMode mode = DiscoveryMode::recursive);
GeneratingGraph discover_graph(const PatternSet& ts, ParentRule rule, int n, int t,
                               DiscoveryMode mode = DiscoveryMode::recursive);

// Classifies an object by its depth-t fingerprint; nullopt when the graph has
// no class with that fingerprint.
std::optional<int> classify(TreeExplorer& explorer, const GeneratingGraph& g, const PartialPermutation& rho);

// Walk graphs. Class ids are opaque integers, so infinite families can be
// generated on demand.
struct WalkEdge {
  EdgeKind kind = EdgeKind::dot;
  std::int64_t to = 0;
  Int weight = 1;
};

class WalkGraph {
 public:
  virtual ~WalkGraph() = default;
  virtual std::int64_t root() const = 0;
  virtual std::vector<WalkEdge> out_edges(std::int64_t cls) const = 0;
};

class DiscoveredWalkGraph : public WalkGraph {
 public:
  explicit DiscoveredWalkGraph(const GeneratingGraph& g) : g_(g) {}
  std::int64_t root() const override { return g_.root; }
  std::vector<WalkEdge> out_edges(std::int64_t cls) const override;

 private:
  const GeneratingGraph& g_;
};

// (k) -> (2)(3)...(k+1), rooted at (1).
class CatalanWalkGraph : public WalkGraph {
 public:
  std::int64_t root() const override { return 1; }
  std::vector<WalkEdge> out_edges(std::int64_t cls) const override;
};

// Sum over root walks of the product of edge variables, truncated to o.
MultiSeries walk_series(const WalkGraph& g, Orders o);
MultiSeries walk_series(const GeneratingGraph& g, Orders o);

// Brute-force series of the tree: |S_{d,c,r}| for extended rules, |S_n| in x
// for the standard rule. Cells beyond max_total are zero.
MultiSeries brute_series(const PatternSet& ts, ParentRule rule, Orders o, int max_total);

struct Discrepancy {
  bool ok = true;
  Cell cell;
  Int expected = 0;
  Int actual = 0;
};

Discrepancy validate_graph(const GeneratingGraph& g, int horizon);
Discrepancy compare_series(const MultiSeries& expected, const MultiSeries& actual, int max_total);

// Rooted isomorphism preserving edge kinds, weights and frontier flags.
// On success mapping[c1] is the class of g2 matched with c1.
bool graph_isomorphic(const GeneratingGraph& g1, const GeneratingGraph& g2, std::vector<int>* mapping = nullptr);

struct EquivalenceResult {
  bool equivalent = false;
  ParentRule rule1 = ParentRule::standard_extended;
  ParentRule rule2 = ParentRule::standard_extended;
  std::size_t classes1 = 0;
  std::size_t classes2 = 0;
};

// Tries the extended parent rules on both sides, first match wins.
EquivalenceResult graph_equivalent(const PatternSet& a, const PatternSet& b, int n, int t);

// A walk step names the edge kind, the target class and which of the
// parallel children (canonical order) is taken.
struct WalkStep {
  EdgeKind kind = EdgeKind::dot;
  int to = 0;
  int ordinal = 0;
  bool operator==(const WalkStep&) const = default;
};
using Walk = std::vector<WalkStep>;

Walk walk_encode(TreeExplorer& explorer, const GeneratingGraph& g, const PartialPermutation& rho);
PartialPermutation walk_decode(TreeExplorer& explorer, const GeneratingGraph& g, const Walk& w);
std::string walk_str(const Walk& w);

// Graph-induced bijection: encode in (e1, g1), relabel through the
// isomorphism, decode in (e2, g2).
PartialPermutation transport(TreeExplorer& e1, const GeneratingGraph& g1, TreeExplorer& e2,
                             const GeneratingGraph& g2, const std::vector<int>& mapping,
                             const PartialPermutation& rho);

// Every z-edge out of a class with empty rows goes to a class with empty
// rows; such a class with k z-children has targets whose z-child counts are
// exactly 1..k, each reached once; and classes with empty rows are
// determined by their z-child count. Frontier classes are skipped.
struct LadderReport {
  bool ok = true;
  std::string detail;
};
LadderReport check_row_ladder(const GeneratingGraph& g);

// Sufficient condition for independent empty rows: every pattern has its
// two largest values in the same relative order (all n before n-1, or all
// n-1 before n).
bool rows_independent(const PatternSet& ts);

enum class Gadget { lemma_2_8, lemma_2_9, lemma_2_10 };
Gadget parse_gadget(const std::string& text);

// feeders[j-1] is f_j. Returns the DP walk series at b_k and the closed form.
std::pair<MultiSeries, MultiSeries> lemma_walk_series(Gadget lemma, int k, const std::vector<MultiSeries>& feeders,
                                                      int order);
bool lemma_walk_check(Gadget lemma, int k, const std::vector<MultiSeries>& feeders, int order);

std::string graph_to_dot(const GeneratingGraph& g);
std::string graph_to_json(const GeneratingGraph& g);

}  // namespace permutoria
