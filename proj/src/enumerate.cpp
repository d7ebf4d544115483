#include "permutoria/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <unordered_set>

namespace permutoria {

namespace {

// Left-to-right backtracking over injective prefixes, pruning any prefix
// that already contains a pattern.
class AvoiderSearch {
 public:
  AvoiderSearch(int n, const PatternSet& ts) : n_(n), ts_(ts), vals_(static_cast<std::size_t>(n)), used_(static_cast<std::size_t>(n) + 1, 0) {}

  template <class F>
  void run_from(int pos, F&& leaf) {
    if (pos == n_) {
      leaf(vals_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      vals_[static_cast<std::size_t>(pos)] = v;
      if (any_occurs_ending_at(vals_.data(), pos, ts_)) continue;
      used_[static_cast<std::size_t>(v)] = 1;
      run_from(pos + 1, leaf);
      used_[static_cast<std::size_t>(v)] = 0;
    }
  }

  // Fixes the first value and counts completions.
  Int count_with_first(int first) {
    vals_[0] = first;
    used_[static_cast<std::size_t>(first)] = 1;
    Int total = 0;
    if (!any_occurs_ending_at(vals_.data(), 0, ts_)) run_from(1, [&](const std::vector<int>&) { ++total; });
    used_[static_cast<std::size_t>(first)] = 0;
    return total;
  }

 private:
  int n_;
  const PatternSet& ts_;
  std::vector<int> vals_;
  std::vector<char> used_;
};

// Doubly alternating search: sigma up-down is checked against the previous
// value, sigma^{-1} up-down against neighbouring values already placed.
class DaSearch {
 public:
  DaSearch(int n, const PatternSet& ts) : n_(n), ts_(ts), vals_(static_cast<std::size_t>(n)), used_(static_cast<std::size_t>(n) + 2, 0) {}

  template <class F>
  void run(int pos, F&& leaf) {
    if (pos == n_) {
      leaf(vals_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (pos > 0) {
        const int prev = vals_[static_cast<std::size_t>(pos - 1)];
        // positions are 1-based in the definition: pos+1 even needs a rise
        if ((pos % 2 == 1) != (v > prev)) continue;
      }
      // sigma^{-1} up-down: v odd must come before v-1 and v+1;
      // v even must come after both.
      const bool below_placed = v > 1 && used_[static_cast<std::size_t>(v - 1)];
      const bool above_placed = v < n_ && used_[static_cast<std::size_t>(v + 1)];
      if (v % 2 == 1) {
        if (below_placed || above_placed) continue;
      } else {
        if (!below_placed) continue;
        if (v < n_ && !above_placed) continue;
      }
      vals_[static_cast<std::size_t>(pos)] = v;
      if (!ts_.empty() && any_occurs_ending_at(vals_.data(), pos, ts_)) continue;
      used_[static_cast<std::size_t>(v)] = 1;
      run(pos + 1, leaf);
      used_[static_cast<std::size_t>(v)] = 0;
    }
  }

 private:
  int n_;
  const PatternSet& ts_;
  std::vector<int> vals_;
  std::vector<char> used_;
};

}  // namespace

void for_each_avoider(int n, const PatternSet& ts, const std::function<void(const Permutation&)>& visit) {
  check_limit(n, Limits::get().size, "permutation size");
  if (n < 0) fail(Errc::invalid_argument, "negative size");
  AvoiderSearch search(n, ts);
  search.run_from(0, [&](const std::vector<int>& w) { visit(Permutation(w)); });
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& ts) {
  std::vector<Permutation> out;
  for_each_avoider(n, ts, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Int count_avoiders(int n, const PatternSet& ts, int workers) {
  check_limit(n, Limits::get().size, "permutation size");
  if (n < 0) fail(Errc::invalid_argument, "negative size");
  if (n == 0) return 1;
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);
  std::vector<Int> partial(static_cast<std::size_t>(n) + 1, 0);
  std::atomic<int> next{1};
  auto work = [&] {
    AvoiderSearch search(n, ts);
    for (int v = next++; v <= n; v = next++) partial[static_cast<std::size_t>(v)] = search.count_with_first(v);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  Int total = 0;
  for (Int p : partial) total = checked_add(total, p);
  return total;
}

void for_each_da(int n, const PatternSet& ts, const std::function<void(const Permutation&)>& visit) {
  check_limit(n, Limits::get().da_size, "doubly alternating size");
  if (n < 0) fail(Errc::invalid_argument, "negative size");
  DaSearch search(n, ts);
  search.run(0, [&](const std::vector<int>& w) { visit(Permutation(w)); });
}

std::vector<Permutation> enumerate_da(int n, const PatternSet& ts) {
  std::vector<Permutation> out;
  for_each_da(n, ts, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Int count_da(int n, const PatternSet& ts) {
  check_limit(n, Limits::get().da_size, "doubly alternating size");
  if (n < 0) fail(Errc::invalid_argument, "negative size");
  DaSearch search(n, ts);
  Int total = 0;
  search.run(0, [&](const std::vector<int>&) { ++total; });
  return total;
}

namespace {

PartialPermutation corner(const std::vector<int>& w, int R, int C) {
  std::vector<int> cor(static_cast<std::size_t>(R), 0);
  for (int i = 0; i < R; ++i)
    if (w[static_cast<std::size_t>(i)] <= C) cor[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
  return PartialPermutation(R, C, std::move(cor));
}

}  // namespace

std::vector<PartialPermutation> enumerate_extended(int d, int c, int r, const PatternSet& ts) {
  if (d < 0 || c < 0 || r < 0) fail(Errc::invalid_argument, "negative split");
  const int n = d + c + r;
  check_limit(n, Limits::get().size, "extended size");
  std::unordered_set<PartialPermutation, PartialPermutationHash> seen;
  AvoiderSearch search(n, ts);
  search.run_from(0, [&](const std::vector<int>& w) {
    const PartialPermutation p = corner(w, d + r, d + c);
    if (p.d() == d) seen.insert(p);
  });
  std::vector<PartialPermutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Int count_extended(int d, int c, int r, const PatternSet& ts) {
  return static_cast<Int>(enumerate_extended(d, c, r, ts).size());
}

std::map<DcrKey, Int> extended_table(int max_total, const PatternSet& ts) {
  check_limit(max_total, Limits::get().size, "extended size");
  std::map<DcrKey, std::unordered_set<PartialPermutation, PartialPermutationHash>> sets;
  for (int n = 0; n <= max_total; ++n) {
    AvoiderSearch search(n, ts);
    search.run_from(0, [&](const std::vector<int>& w) {
      // every (R, C) with R + C - (dots in the corner) = n is one cell
      for (int R = 0; R <= n; ++R) {
        for (int C = 0; C <= n; ++C) {
          int dots = 0;
          for (int i = 0; i < R; ++i) dots += w[static_cast<std::size_t>(i)] <= C;
          if (R + C - dots != n) continue;
          sets[{dots, C - dots, R - dots}].insert(corner(w, R, C));
        }
      }
    });
  }
  std::map<DcrKey, Int> out;
  for (int d = 0; d <= max_total; ++d)
    for (int c = 0; d + c <= max_total; ++c)
      for (int r = 0; d + c + r <= max_total; ++r) {
        auto it = sets.find({d, c, r});
        out[{d, c, r}] = it == sets.end() ? 0 : static_cast<Int>(it->second.size());
      }
  return out;
}

Sequence parse_sequence(const std::string& name) {
  if (name == "catalan") return Sequence::catalan;
  if (name == "fibonacci") return Sequence::fibonacci;
  if (name == "euler") return Sequence::euler;
  if (name == "catalan-diff-4") return Sequence::catalan_diff_4;
  fail(Errc::parse_error, "unknown sequence '" + name + "'");
}

Int catalan(int n) {
  if (n < 0) fail(Errc::invalid_argument, "negative Catalan index");
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int s = 0;
    for (int i = 0; i < m; ++i) s = checked_add(s, checked_mul(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(m - 1 - i)]));
    c[static_cast<std::size_t>(m)] = s;
  }
  return c[static_cast<std::size_t>(n)];
}

Int fibonacci(int n) {
  if (n < 0) {
    const Int f = fibonacci(-n);
    return (-n) % 2 == 1 ? f : -f;
  }
  Int a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const Int t = checked_add(a, b);
    a = b;
    b = t;
  }
  return a;
}

namespace {

Int euler_number(int n) {
  // 2 E_{m+1} = sum_k binom(m,k) E_k E_{m-k} for m >= 1
  std::vector<Int> e(static_cast<std::size_t>(std::max(n, 1)) + 1, 0);
  e[0] = 1;
  e[1] = 1;
  std::vector<Int> row{1};
  for (int m = 1; m < n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m) + 1, 1);
    for (int k = 1; k < m; ++k) next[static_cast<std::size_t>(k)] = checked_add(row[static_cast<std::size_t>(k - 1)], row[static_cast<std::size_t>(k)]);
    row = next;
    Int s = 0;
    for (int k = 0; k <= m; ++k)
      s = checked_add(s, checked_mul(row[static_cast<std::size_t>(k)], checked_mul(e[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(m - k)])));
    e[static_cast<std::size_t>(m + 1)] = s / 2;
  }
  return e[static_cast<std::size_t>(n)];
}

}  // namespace

Int catalan_diff4_closed(int n) {
  // 9 C_n (9n^4 + 54n^3 + 135n^2 + 122n + 40) / ((n+2)(n+3)(n+4)(n+5))
  const Int m = n;
  const Int poly = 9 * m * m * m * m + 54 * m * m * m + 135 * m * m + 122 * m + 40;
  const Int num = checked_mul(checked_mul(9, catalan(n)), poly);
  const Int den = (m + 2) * (m + 3) * (m + 4) * (m + 5);
  if (num % den != 0) fail(Errc::invalid_argument, "closed form is not integral");
  return num / den;
}

Int sequence(Sequence id, int n) {
  switch (id) {
    case Sequence::catalan: return catalan(n);
    case Sequence::fibonacci: return fibonacci(n);
    case Sequence::euler:
      if (n < 0) fail(Errc::invalid_argument, "negative index");
      return euler_number(n);
    case Sequence::catalan_diff_4:
      if (n < 0) fail(Errc::invalid_argument, "negative index");
      return checked_add(checked_add(checked_add(catalan(n + 4), -4 * catalan(n + 3)), checked_add(6 * catalan(n + 2), -4 * catalan(n + 1))), catalan(n));
  }
  return 0;
}

bool ConjectureReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.match; });
}

ConjectureReport conjecture_report(const std::string& id, int n_max) {
  check_limit(n_max, Limits::get().da_size, "conjecture size");
  ConjectureReport rep;
  rep.id = id;
  auto P = [](const char* s) { return parse_pattern_set(s); };
  if (id == "P1-7.1") {
    rep.statement = "|DA_2n(1234)| = |DA_2n+1(1243)| = |DA_2n(1432)| = |DA_2n+1(1432)| = |DA_2n(2341)| = |DA_2n(3421)| = |S_n(1234)|";
    for (int n = 1; 2 * n <= n_max; ++n) {
      ConjectureRow row;
      row.n = n;
      row.rhs_label = "S_n(1234)";
      row.rhs = count_avoiders(n, P("1234"));
      row.values.emplace_back("DA_2n(1234)", count_da(2 * n, P("1234")));
      if (2 * n + 1 <= n_max) row.values.emplace_back("DA_2n+1(1243)", count_da(2 * n + 1, P("1243")));
      row.values.emplace_back("DA_2n(1432)", count_da(2 * n, P("1432")));
      if (2 * n + 1 <= n_max) row.values.emplace_back("DA_2n+1(1432)", count_da(2 * n + 1, P("1432")));
      row.values.emplace_back("DA_2n(2341)", count_da(2 * n, P("2341")));
      row.values.emplace_back("DA_2n(3421)", count_da(2 * n, P("3421")));
      row.match = std::all_of(row.values.begin(), row.values.end(), [&](const auto& v) { return v.second == row.rhs; });
      rep.rows.push_back(row);
    }
  } else if (id == "P1-8.2") {
    rep.statement = "|DA_n(1234,3214)| = F_{n-1} (n even), 1 (n = 1, 3), F_{n-1} - F_{n-7} otherwise (F_k = 0 for k < 0)";
    for (int n = 1; n <= n_max; ++n) {
      ConjectureRow row;
      row.n = n;
      row.values.emplace_back("DA_n(1234,3214)", count_da(n, P("1234,3214")));
      if (n % 2 == 0) {
        row.rhs_label = "F_{n-1}";
        row.rhs = fibonacci(n - 1);
      } else if (n == 1 || n == 3) {
        row.rhs_label = "1";
        row.rhs = 1;
      } else {
        // F_k = 0 for k < 0 here; n = 5 reaches F_{-2}.
        row.rhs_label = "F_{n-1} - F_{n-7}";
        row.rhs = fibonacci(n - 1) - (n >= 7 ? fibonacci(n - 7) : 0);
      }
      row.match = row.values[0].second == row.rhs;
      rep.rows.push_back(row);
    }
  } else if (id == "P1-8.3") {
    rep.statement = "|DA_n(1234,2134)| = C_{n/2} (n even), 1 (n = 1, 3), C^{(4)}_{(n-5)/2} otherwise";
    for (int n = 1; n <= n_max; ++n) {
      ConjectureRow row;
      row.n = n;
      row.values.emplace_back("DA_n(1234,2134)", count_da(n, P("1234,2134")));
      if (n % 2 == 0) {
        row.rhs_label = "C_{n/2}";
        row.rhs = catalan(n / 2);
      } else if (n == 1 || n == 3) {
        row.rhs_label = "1";
        row.rhs = 1;
      } else {
        row.rhs_label = "C4_{(n-5)/2}";
        row.rhs = sequence(Sequence::catalan_diff_4, (n - 5) / 2);
      }
      row.match = row.values[0].second == row.rhs;
      rep.rows.push_back(row);
    }
  } else {
    fail(Errc::invalid_argument, "unknown conjecture '" + id + "'");
  }
  return rep;
}

}  // namespace permutoria
