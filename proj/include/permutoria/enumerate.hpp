#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "permutoria/permcore.hpp"

namespace permutoria {

// Visits S_n(ts) in lexicographic order.
void for_each_avoider(int n, const PatternSet& ts, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& ts);
// workers <= 0 picks the hardware concurrency.
Int count_avoiders(int n, const PatternSet& ts, int workers = 1);

// Visits DA_n(ts) in lexicographic order. An empty ts means no restriction.
void for_each_da(int n, const PatternSet& ts, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_da(int n, const PatternSet& ts);
Int count_da(int n, const PatternSet& ts);

// Distinct NW corners with the given split among S_{d+c+r}(ts).
std::vector<PartialPermutation> enumerate_extended(int d, int c, int r, const PatternSet& ts);
Int count_extended(int d, int c, int r, const PatternSet& ts);

// Counts |S_{d,c,r}(ts)| for every cell with d+c+r <= max_total.
using DcrKey = std::tuple<int, int, int>;
std::map<DcrKey, Int> extended_table(int max_total, const PatternSet& ts);

enum class Sequence { catalan, fibonacci, euler, catalan_diff_4 };
Sequence parse_sequence(const std::string& name);
// Fibonacci accepts negative indices (F_{-n} = (-1)^{n+1} F_n).
Int sequence(Sequence id, int n);
Int catalan(int n);
Int fibonacci(int n);
Int catalan_diff4_closed(int n);

struct ConjectureRow {
  int n = 0;
  std::vector<std::pair<std::string, Int>> values;  // labelled left-hand sides
  std::string rhs_label;
  Int rhs = 0;
  bool match = false;
};

struct ConjectureReport {
  std::string id;
  std::string statement;
  std::vector<ConjectureRow> rows;
  bool all_match() const;
};

ConjectureReport conjecture_report(const std::string& id, int n_max);

}  // namespace permutoria
