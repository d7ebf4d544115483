#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permutoria/common.hpp"

namespace permutoria {

// One-line notation, values 1..n. Row i of the matrix holds a dot in column
// word[i-1].
struct Permutation {
  std::vector<int> word;

  Permutation() = default;
  explicit Permutation(std::vector<int> w);

  int size() const { return static_cast<int>(word.size()); }
  int operator()(int i) const { return word[static_cast<std::size_t>(i - 1)]; }

  // Accepts "2413" (single digits) or "2,4,1,3".
  static Permutation parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
};

Permutation identity_permutation(int n);
bool is_permutation_word(const std::vector<int>& w);

// Pattern sets are kept normalized: sorted, duplicate free, and no member
// contains another member.
using PatternSet = std::vector<Permutation>;

PatternSet normalize_patterns(std::vector<Permutation> patterns);
PatternSet parse_pattern_set(std::string_view text);
std::string pattern_set_str(const PatternSet& ts);

bool contains_pattern(const Permutation& sigma, const Permutation& tau);
bool avoids_all(const Permutation& sigma, const PatternSet& ts);

// Does tau occur in vals[0..last] using position `last` as the final letter?
// vals must hold distinct integers.
bool occurs_ending_at(const int* vals, int last, const Permutation& tau);
bool any_occurs_ending_at(const int* vals, int last, const PatternSet& ts);

enum class Symmetry { reverse, complement, inverse, rotate180 };

Permutation symmetry(const Permutation& sigma, Symmetry op);
PatternSet symmetry(const PatternSet& ts, Symmetry op);
Permutation inverse(const Permutation& sigma);

enum class Alternation { up_down, down_up };

// Words use 0 for a gap (an empty row). Rises are strict, descents are weak:
// signature entries are +1 (w_i < w_{i+1}), -1 (w_i >= w_{i+1}) and 0 when a
// gap touches the pair.
std::vector<int> signature(const std::vector<int>& w);
bool is_alternating(const std::vector<int>& w, Alternation mode = Alternation::up_down);

bool is_doubly_alternating(const Permutation& sigma);
bool is_baxter(const Permutation& sigma);

// A rectangular 0-1 matrix with at most one dot per row and column.
struct PartialPermutation {
  int rows = 0;
  int cols = 0;
  std::vector<int> col_of_row;  // size rows, 0 marks an empty row

  PartialPermutation() = default;
  PartialPermutation(int rows_, int cols_, std::vector<int> col_of_row_);

  int d() const;
  int r() const { return rows - d(); }
  int c() const { return cols - d(); }
  int total() const { return rows + cols - d(); }
  bool is_zero() const { return rows == 0 && cols == 0; }
  bool is_permutation() const { return r() == 0 && c() == 0; }

  std::vector<std::pair<int, int>> dots() const;
  Permutation dot_pattern() const;  // standardized dots, read by rows

  static PartialPermutation from_permutation(const Permutation& sigma);
  static PartialPermutation from_dots(int rows, int cols, const std::vector<std::pair<int, int>>& dots);
  // "3,_,_,2,6,5|6"; the suffix is optional when no column is empty.
  static PartialPermutation parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const PartialPermutation&) const = default;
};

PartialPermutation transpose(const PartialPermutation& rho);

struct PartialPermutationHash {
  std::size_t operator()(const PartialPermutation& p) const;
};

enum class ParentRule { standard, standard_extended, alt_extended };
ParentRule parse_rule(std::string_view text);
const char* rule_name(ParentRule rule);
inline bool is_extended(ParentRule rule) { return rule != ParentRule::standard; }

enum class EdgeKind : int { dot = 0, column = 1, row = 2 };
const char* edge_kind_letter(EdgeKind k);

struct Child {
  EdgeKind kind;
  PartialPermutation node;
};

PartialPermutation parent(const PartialPermutation& rho, ParentRule rule);

// All objects whose parent is rho, before any avoidance filtering, in
// canonical order: dot sites top to bottom, the column, row sites top to
// bottom.
std::vector<Child> candidate_children(const PartialPermutation& rho, ParentRule rule);

bool extendably_avoids(const PartialPermutation& rho, const PatternSet& ts);

// Memoized extendability test for a fixed pattern set.
class ExtensionOracle {
 public:
  explicit ExtensionOracle(PatternSet ts);
  bool operator()(const PartialPermutation& rho);
  const PatternSet& patterns() const { return ts_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  PatternSet ts_;
  std::unordered_map<PartialPermutation, bool, PartialPermutationHash> cache_;
};

std::vector<Child> children(const PartialPermutation& rho, ParentRule rule, ExtensionOracle& oracle);
std::vector<Child> children(const PartialPermutation& rho, ParentRule rule, const PatternSet& ts);

}  // namespace permutoria
