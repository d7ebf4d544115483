#include "permutoria/permcore.hpp"

#include <algorithm>
#include <sstream>

namespace permutoria {

namespace {

std::vector<std::string> split_any(std::string_view text, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (seps.find(ch) != std::string_view::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\n')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\n')) --b;
  return std::string(s.substr(a, b - a));
}

int parse_int(const std::string& s) {
  if (s.empty()) fail(Errc::parse_error, "empty number");
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') fail(Errc::parse_error, "bad number '" + s + "'");
    v = v * 10 + (ch - '0');
    if (v > 1000000) fail(Errc::parse_error, "number too large '" + s + "'");
  }
  return v;
}

bool match_rec(const int* vals, int last, const int* t, int k, int j, int start, int* chosen) {
  if (j == k - 1) return true;
  const int remaining = k - 1 - j;
  const bool below_last = t[j] < t[k - 1];
  for (int i = start; i <= last - remaining; ++i) {
    const int v = vals[i];
    if ((v < vals[last]) != below_last) continue;
    bool ok = true;
    for (int a = 0; a < j; ++a) {
      if ((vals[chosen[a]] < v) != (t[a] < t[j])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[j] = i;
    if (match_rec(vals, last, t, k, j + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
  if (!is_permutation_word(word)) fail(Errc::invalid_argument, "not a permutation word");
}

bool is_permutation_word(const std::vector<int>& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation Permutation::parse(std::string_view text) {
  std::string t = trim(text);
  std::vector<int> w;
  if (t.find(',') != std::string::npos || t.find(' ') != std::string::npos) {
    for (const auto& part : split_any(t, ", ")) w.push_back(parse_int(part));
  } else {
    for (char ch : t) {
      if (ch < '1' || ch > '9') fail(Errc::parse_error, "bad permutation '" + t + "'");
      w.push_back(ch - '0');
    }
  }
  if (!is_permutation_word(w)) fail(Errc::parse_error, "not a permutation: '" + t + "'");
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i) s.push_back(',');
    s += std::to_string(word[i]);
  }
  return s;
}

Permutation identity_permutation(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

bool occurs_ending_at(const int* vals, int last, const Permutation& tau) {
  const int k = tau.size();
  if (k == 0) return true;
  if (last < k - 1) return false;
  int chosen[32];
  return match_rec(vals, last, tau.word.data(), k, 0, 0, chosen);
}

bool any_occurs_ending_at(const int* vals, int last, const PatternSet& ts) {
  for (const auto& t : ts) {
    if (occurs_ending_at(vals, last, t)) return true;
  }
  return false;
}

bool contains_pattern(const Permutation& sigma, const Permutation& tau) {
  if (tau.size() == 0) return true;
  for (int last = tau.size() - 1; last < sigma.size(); ++last) {
    if (occurs_ending_at(sigma.word.data(), last, tau)) return true;
  }
  return false;
}

bool avoids_all(const Permutation& sigma, const PatternSet& ts) {
  for (const auto& t : ts) {
    if (contains_pattern(sigma, t)) return false;
  }
  return true;
}

PatternSet normalize_patterns(std::vector<Permutation> patterns) {
  std::sort(patterns.begin(), patterns.end(), [](const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.word < b.word;
  });
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  PatternSet out;
  for (const auto& p : patterns) {
    bool redundant = false;
    for (const auto& q : out) {
      if (contains_pattern(p, q)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(p);
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Permutation> ps;
  for (const auto& part : split_any(text, ",; {}")) ps.push_back(Permutation::parse(part));
  if (ps.empty()) return {};
  return normalize_patterns(std::move(ps));
}

std::string pattern_set_str(const PatternSet& ts) {
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) s.push_back(',');
    s += ts[i].str();
  }
  return s;
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> w(sigma.word.size());
  for (int i = 1; i <= sigma.size(); ++i) w[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(std::move(w));
}

Permutation symmetry(const Permutation& sigma, Symmetry op) {
  const int n = sigma.size();
  std::vector<int> w(sigma.word.size());
  switch (op) {
    case Symmetry::reverse:
      for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = sigma(n + 1 - i);
      return Permutation(std::move(w));
    case Symmetry::complement:
      for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = n + 1 - sigma(i);
      return Permutation(std::move(w));
    case Symmetry::rotate180:
      for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = n + 1 - sigma(n + 1 - i);
      return Permutation(std::move(w));
    case Symmetry::inverse:
      return inverse(sigma);
  }
  return sigma;
}

PatternSet symmetry(const PatternSet& ts, Symmetry op) {
  std::vector<Permutation> out;
  for (const auto& t : ts) out.push_back(symmetry(t, op));
  return normalize_patterns(std::move(out));
}

std::vector<int> signature(const std::vector<int>& w) {
  std::vector<int> s;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 0 || w[i + 1] == 0) s.push_back(0);
    else s.push_back(w[i] < w[i + 1] ? 1 : -1);
  }
  return s;
}

bool is_alternating(const std::vector<int>& w, Alternation mode) {
  const auto s = signature(w);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) continue;
    int want = (i % 2 == 0) ? 1 : -1;
    if (mode == Alternation::down_up) want = -want;
    if (s[i] != want) return false;
  }
  return true;
}

bool is_doubly_alternating(const Permutation& sigma) {
  return is_alternating(sigma.word) && is_alternating(inverse(sigma).word);
}

bool is_baxter(const Permutation& s) {
  const int n = s.size();
  for (int i = 1; i <= n; ++i)
    for (int l = i + 3; l <= n; ++l) {
      const bool first = s(i) + 1 == s(l);
      const bool second = s(l) + 1 == s(i);
      if (!first && !second) continue;
      for (int j = i + 1; j < l; ++j)
        for (int k = j + 1; k < l; ++k) {
          if (first && s(j) > s(l) && !(s(k) > s(l))) return false;
          if (second && s(k) > s(i) && !(s(j) > s(i))) return false;
        }
    }
  return true;
}

// ---------------------------------------------------------------------------

PartialPermutation::PartialPermutation(int rows_, int cols_, std::vector<int> col_of_row_)
    : rows(rows_), cols(cols_), col_of_row(std::move(col_of_row_)) {
  if (rows < 0 || cols < 0 || static_cast<int>(col_of_row.size()) != rows)
    fail(Errc::invalid_argument, "bad partial permutation dimensions");
  std::vector<char> used(static_cast<std::size_t>(cols) + 1, 0);
  for (int c : col_of_row) {
    if (c == 0) continue;
    if (c < 0 || c > cols || used[static_cast<std::size_t>(c)])
      fail(Errc::invalid_argument, "partial permutation column reused or out of range");
    used[static_cast<std::size_t>(c)] = 1;
  }
}

int PartialPermutation::d() const {
  int n = 0;
  for (int c : col_of_row) n += c != 0;
  return n;
}

std::vector<std::pair<int, int>> PartialPermutation::dots() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rows; ++i) {
    if (col_of_row[static_cast<std::size_t>(i)]) out.emplace_back(i + 1, col_of_row[static_cast<std::size_t>(i)]);
  }
  return out;
}

Permutation PartialPermutation::dot_pattern() const {
  std::vector<int> vals;
  for (int c : col_of_row)
    if (c) vals.push_back(c);
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : vals) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return Permutation(std::move(vals));
}

PartialPermutation PartialPermutation::from_permutation(const Permutation& sigma) {
  return PartialPermutation(sigma.size(), sigma.size(), sigma.word);
}

PartialPermutation PartialPermutation::from_dots(int rows, int cols, const std::vector<std::pair<int, int>>& dots) {
  std::vector<int> cor(static_cast<std::size_t>(rows), 0);
  for (auto [i, j] : dots) {
    if (i < 1 || i > rows || j < 1 || j > cols) fail(Errc::invalid_argument, "dot outside the matrix");
    if (cor[static_cast<std::size_t>(i - 1)]) fail(Errc::invalid_argument, "two dots in one row");
    cor[static_cast<std::size_t>(i - 1)] = j;
  }
  return PartialPermutation(rows, cols, std::move(cor));
}

PartialPermutation PartialPermutation::parse(std::string_view text) {
  std::string t = trim(text);
  int cols = -1;
  auto bar = t.find('|');
  if (bar != std::string::npos) {
    cols = parse_int(trim(t.substr(bar + 1)));
    t = t.substr(0, bar);
  }
  std::vector<int> cor;
  if (t.find(',') != std::string::npos) {
    for (const auto& part : split_any(t, ", ")) cor.push_back(part == "_" ? 0 : parse_int(part));
  } else {
    for (char ch : t) {
      if (ch == ' ') continue;
      if (ch == '_') cor.push_back(0);
      else if (ch >= '1' && ch <= '9') cor.push_back(ch - '0');
      else fail(Errc::parse_error, "bad partial permutation '" + std::string(text) + "'");
    }
  }
  int maxc = 0, d = 0;
  for (int c : cor) {
    maxc = std::max(maxc, c);
    d += c != 0;
  }
  if (cols < 0) cols = d;
  if (maxc > cols) fail(Errc::parse_error, "column index exceeds column count");
  const int rows = static_cast<int>(cor.size());
  return PartialPermutation(rows, cols, std::move(cor));
}

std::string PartialPermutation::str() const {
  std::string s;
  for (int i = 0; i < rows; ++i) {
    if (i) s.push_back(',');
    const int c = col_of_row[static_cast<std::size_t>(i)];
    s += c ? std::to_string(c) : std::string("_");
  }
  if (c() > 0 || (rows == 0 && cols > 0)) s += "|" + std::to_string(cols);
  return s;
}

PartialPermutation transpose(const PartialPermutation& rho) {
  std::vector<int> cor(static_cast<std::size_t>(rho.cols), 0);
  for (auto [i, j] : rho.dots()) cor[static_cast<std::size_t>(j - 1)] = i;
  return PartialPermutation(rho.cols, rho.rows, std::move(cor));
}

std::size_t PartialPermutationHash::operator()(const PartialPermutation& p) const {
  std::size_t h = static_cast<std::size_t>(p.rows) * 1000003u + static_cast<std::size_t>(p.cols);
  for (int c : p.col_of_row) h = h * 1099511628211ull + static_cast<std::size_t>(c + 1);
  return h;
}

ParentRule parse_rule(std::string_view text) {
  if (text == "standard") return ParentRule::standard;
  if (text == "ext" || text == "standard-extended") return ParentRule::standard_extended;
  if (text == "ext-alt" || text == "alt-extended") return ParentRule::alt_extended;
  fail(Errc::parse_error, "unknown rule '" + std::string(text) + "'");
}

const char* rule_name(ParentRule rule) {
  switch (rule) {
    case ParentRule::standard: return "standard";
    case ParentRule::standard_extended: return "ext";
    case ParentRule::alt_extended: return "ext-alt";
  }
  return "?";
}

const char* edge_kind_letter(EdgeKind k) {
  switch (k) {
    case EdgeKind::dot: return "x";
    case EdgeKind::column: return "y";
    case EdgeKind::row: return "z";
  }
  return "?";
}

namespace {

PartialPermutation remove_row(const PartialPermutation& rho, int row) {
  std::vector<int> cor = rho.col_of_row;
  cor.erase(cor.begin() + (row - 1));
  return PartialPermutation(rho.rows - 1, rho.cols, std::move(cor));
}

PartialPermutation remove_row_and_column(const PartialPermutation& rho, int row, int col) {
  std::vector<int> cor;
  for (int i = 1; i <= rho.rows; ++i) {
    if (i == row) continue;
    int c = rho.col_of_row[static_cast<std::size_t>(i - 1)];
    if (c > col) --c;
    cor.push_back(c);
  }
  return PartialPermutation(rho.rows - 1, rho.cols - 1, std::move(cor));
}

std::vector<int> empty_rows(const PartialPermutation& rho) {
  std::vector<int> e;
  for (int i = 1; i <= rho.rows; ++i)
    if (!rho.col_of_row[static_cast<std::size_t>(i - 1)]) e.push_back(i);
  return e;
}

}  // namespace

PartialPermutation parent(const PartialPermutation& rho, ParentRule rule) {
  if (rho.rows == 0 && rho.cols == 0) fail(Errc::zero_object, "the zero object has no parent");
  if (rule == ParentRule::standard) {
    if (!rho.is_permutation()) fail(Errc::invalid_argument, "standard rule needs a permutation");
  } else {
    const auto e = empty_rows(rho);
    if (!e.empty()) return remove_row(rho, rule == ParentRule::alt_extended ? e.front() : e.back());
    bool last_col_empty = true;
    for (int c : rho.col_of_row) last_col_empty &= c != rho.cols;
    if (rho.cols > 0 && last_col_empty) return PartialPermutation(rho.rows, rho.cols - 1, rho.col_of_row);
  }
  int row = 0;
  for (int i = 1; i <= rho.rows; ++i)
    if (rho.col_of_row[static_cast<std::size_t>(i - 1)] == rho.cols) row = i;
  if (row == 0) fail(Errc::invalid_argument, "no dot in the rightmost column");
  return remove_row_and_column(rho, row, rho.cols);
}

std::vector<Child> candidate_children(const PartialPermutation& rho, ParentRule rule) {
  std::vector<Child> out;
  const auto e = empty_rows(rho);
  if (rule == ParentRule::standard && !rho.is_permutation())
    fail(Errc::invalid_argument, "standard rule needs a permutation");
  const bool no_empty_rows = e.empty();
  if (no_empty_rows) {
    for (int s = 1; s <= rho.rows + 1; ++s) {
      std::vector<int> cor = rho.col_of_row;
      cor.insert(cor.begin() + (s - 1), rho.cols + 1);
      out.push_back({EdgeKind::dot, PartialPermutation(rho.rows + 1, rho.cols + 1, std::move(cor))});
    }
  }
  if (rule == ParentRule::standard) return out;
  if (no_empty_rows) out.push_back({EdgeKind::column, PartialPermutation(rho.rows, rho.cols + 1, rho.col_of_row)});
  int lo = 1, hi = rho.rows + 1;
  if (!e.empty()) {
    if (rule == ParentRule::standard_extended) lo = e.back() + 1;
    else hi = e.front();
  }
  for (int s = lo; s <= hi; ++s) {
    std::vector<int> cor = rho.col_of_row;
    cor.insert(cor.begin() + (s - 1), 0);
    out.push_back({EdgeKind::row, PartialPermutation(rho.rows + 1, rho.cols, std::move(cor))});
  }
  return out;
}

namespace {

struct Completion {
  const PartialPermutation& rho;
  const PatternSet& ts;
  int n;
  std::vector<int> vals;
  std::vector<char> used;
  std::vector<int> empty_cols;

  Completion(const PartialPermutation& r, const PatternSet& t)
      : rho(r), ts(t), n(r.total()), vals(static_cast<std::size_t>(n)), used(static_cast<std::size_t>(n) + 1, 0) {
    std::vector<char> taken(static_cast<std::size_t>(rho.cols) + 1, 0);
    for (int c : rho.col_of_row) taken[static_cast<std::size_t>(c)] = 1;
    for (int c = 1; c <= rho.cols; ++c)
      if (!taken[static_cast<std::size_t>(c)]) empty_cols.push_back(c);
  }

  bool place(int i, int col) {
    vals[static_cast<std::size_t>(i)] = col;
    if (any_occurs_ending_at(vals.data(), i, ts)) return false;
    used[static_cast<std::size_t>(col)] = 1;
    bool ok = run(i + 1);
    used[static_cast<std::size_t>(col)] = 0;
    return ok;
  }

  bool run(int i) {
    if (i == n) return true;
    if (i < rho.rows) {
      const int fixed = rho.col_of_row[static_cast<std::size_t>(i)];
      if (fixed) return place(i, fixed);
      for (int col = rho.cols + 1; col <= n; ++col)
        if (!used[static_cast<std::size_t>(col)] && place(i, col)) return true;
      return false;
    }
    for (int col : empty_cols)
      if (!used[static_cast<std::size_t>(col)] && place(i, col)) return true;
    return false;
  }
};

}  // namespace

bool extendably_avoids(const PartialPermutation& rho, const PatternSet& ts) {
  if (!avoids_all(rho.dot_pattern(), ts)) return false;
  Completion comp(rho, ts);
  return comp.run(0);
}

ExtensionOracle::ExtensionOracle(PatternSet ts) : ts_(std::move(ts)) {}

bool ExtensionOracle::operator()(const PartialPermutation& rho) {
  auto it = cache_.find(rho);
  if (it != cache_.end()) return it->second;
  const bool v = extendably_avoids(rho, ts_);
  cache_.emplace(rho, v);
  return v;
}

std::vector<Child> children(const PartialPermutation& rho, ParentRule rule, ExtensionOracle& oracle) {
  std::vector<Child> out;
  for (auto& ch : candidate_children(rho, rule)) {
    const bool ok = rule == ParentRule::standard ? avoids_all(Permutation(ch.node.col_of_row), oracle.patterns())
                                                 : oracle(ch.node);
    if (ok) out.push_back(std::move(ch));
  }
  return out;
}

std::vector<Child> children(const PartialPermutation& rho, ParentRule rule, const PatternSet& ts) {
  ExtensionOracle oracle(ts);
  return children(rho, rule, oracle);
}

}  // namespace permutoria
