#include "permutoria/bijections.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace permutoria {

namespace {

std::string word_str(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

int entries(const StandardTableau& t) {
  int n = 0;
  for (const auto& r : t) n += static_cast<int>(r.size());
  return n;
}

bool yamanouchi_letters(const std::vector<int>& w, int letters) {
  std::vector<int> cnt(static_cast<std::size_t>(letters) + 1, 0);
  for (int v : w) {
    if (v < 1 || v > letters) return false;
    ++cnt[v];
    if (v > 1 && cnt[v] > cnt[v - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_standard(const StandardTableau& t) {
  const int n = entries(t);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty()) return false;
    if (r > 0 && t[r].size() > t[r - 1].size()) return false;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      int v = t[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && t[r][c - 1] >= v) return false;
      if (r > 0 && t[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::vector<int> column_reading(const StandardTableau& t) {
  std::vector<int> col(static_cast<std::size_t>(entries(t)));
  for (const auto& r : t)
    for (std::size_t c = 0; c < r.size(); ++c) col[r[c] - 1] = static_cast<int>(c) + 1;
  return col;
}

std::vector<int> row_reading(const StandardTableau& t) {
  std::vector<int> row(static_cast<std::size_t>(entries(t)));
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int v : t[r]) row[v - 1] = static_cast<int>(r) + 1;
  return row;
}

StandardTableau from_column_reading(const std::vector<int>& w) {
  std::vector<int> height;
  StandardTableau t;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int c = w[k];
    if (c < 1 || c > static_cast<int>(height.size()) + 1)
      fail(Errc::not_yamanouchi, "column word " + word_str(w) + " is not Yamanouchi");
    if (c > static_cast<int>(height.size())) height.push_back(0);
    if (c > 1 && height[c - 1] >= height[c - 2])
      fail(Errc::not_yamanouchi, "column word " + word_str(w) + " is not Yamanouchi");
    int r = height[c - 1]++;
    if (r == static_cast<int>(t.size())) t.emplace_back();
    t[r].push_back(static_cast<int>(k) + 1);
  }
  return t;
}

bool is_alternating_tableau(const StandardTableau& t) { return is_alternating(column_reading(t), Alternation::up_down); }

std::vector<int> colpair(const StandardTableau& t) {
  if (!is_standard(t)) fail(Errc::invalid_argument, "colpair needs a standard tableau");
  if (!t.empty() && t[0].size() > 3) fail(Errc::too_many_columns, "colpair needs at most three columns");
  std::vector<int> col = column_reading(t);
  if (col.size() % 2 != 0 || !is_alternating(col, Alternation::up_down))
    fail(Errc::not_alternating, "column reading " + word_str(col) + " is not up-down alternating of even length");
  std::vector<int> w;
  for (std::size_t i = 0; i < col.size(); i += 2) w.push_back(col[i] + col[i + 1] - 2);
  return w;
}

StandardTableau colpair_inv(const std::vector<int>& w) {
  if (!yamanouchi_letters(w, 3)) fail(Errc::not_yamanouchi, "word " + word_str(w) + " is not Yamanouchi on three letters");
  static const int first[] = {0, 1, 1, 2}, second[] = {0, 2, 3, 3};
  std::vector<int> col;
  for (int v : w) {
    col.push_back(first[v]);
    col.push_back(second[v]);
  }
  return from_column_reading(col);
}

std::pair<StandardTableau, StandardTableau> rsk_permutation(const Permutation& sigma) {
  StandardTableau p, q;
  for (int i = 1; i <= sigma.size(); ++i) {
    int x = sigma(i);
    for (std::size_t row = 0;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(i);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {p, q};
}

Permutation rsk_permutation_inverse(const StandardTableau& p_in, const StandardTableau& q_in) {
  if (!is_standard(p_in) || !is_standard(q_in)) fail(Errc::invalid_argument, "RSK inverse needs standard tableaux");
  bool same = p_in.size() == q_in.size();
  for (std::size_t r = 0; same && r < p_in.size(); ++r) same = p_in[r].size() == q_in[r].size();
  if (!same) fail(Errc::shape_mismatch, "P and Q have different shapes");
  StandardTableau p = p_in;
  const int n = entries(q_in);
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < q_in.size(); ++r)
    for (int v : q_in[r]) row_of[v] = static_cast<int>(r);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    int r = row_of[i];
    int x = p[r].back();
    p[r].pop_back();
    for (int up = r - 1; up >= 0; --up) {
      auto it = std::lower_bound(p[up].begin(), p[up].end(), x);
      --it;
      std::swap(x, *it);
    }
    w[i - 1] = x;
    if (p[r].empty()) p.pop_back();
  }
  return Permutation(w);
}

Permutation phi(const Permutation& sigma) {
  if (contains_pattern(sigma, Permutation({1, 2, 3, 4}))) fail(Errc::not_avoider, sigma.str() + " contains 1234");
  auto [p, q] = rsk_permutation(sigma);
  return rsk_permutation_inverse(colpair_inv(column_reading(p)), colpair_inv(column_reading(q)));
}

Permutation phi_inv(const Permutation& sigma) {
  if (sigma.size() % 2 != 0 || !is_doubly_alternating(sigma))
    fail(Errc::not_in_domain, sigma.str() + " is not doubly alternating of even size");
  if (contains_pattern(sigma, Permutation({1, 2, 3, 4}))) fail(Errc::not_avoider, sigma.str() + " contains 1234");
  auto [p, q] = rsk_permutation(sigma);
  return rsk_permutation_inverse(from_column_reading(colpair(p)), from_column_reading(colpair(q)));
}

bool is_dyck_path(std::string_view path) {
  int h = 0;
  for (char ch : path) {
    if (ch == 'U') ++h;
    else if (ch == 'D') --h;
    else return false;
    if (h < 0) return false;
  }
  return h == 0;
}

std::vector<std::string> dyck_paths(int semilength) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int)> go = [&](int up, int down) {
    if (up == semilength && down == semilength) {
      out.push_back(cur);
      return;
    }
    if (up < semilength) {
      cur.push_back('U');
      go(up + 1, down);
      cur.pop_back();
    }
    if (down < up) {
      cur.push_back('D');
      go(up, down + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

namespace {

std::vector<int> standardize(const std::vector<int>& w) {
  std::vector<int> sorted(w);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : w) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

std::string theta_word(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::string path;
  int start = 0, top = n;
  while (start < n) {
    // The block ends once its rows hold exactly the largest remaining values.
    int lo = top, end = start;
    for (; end < n; ++end) {
      lo = std::min(lo, w[end]);
      if (top - lo + 1 == end - start + 1) break;
    }
    std::vector<int> block = standardize(std::vector<int>(w.begin() + start, w.begin() + end + 1));
    const int k = static_cast<int>(block.size());
    if (k % 2 != 0 || block.front() != 1 || block.back() != k)
      fail(Errc::not_in_domain, "block does not have the form (1, ..., 2k)");
    std::vector<int> mid(block.begin() + 1, block.end() - 1);
    std::reverse(mid.begin(), mid.end());
    path += "U" + theta_word(standardize(mid)) + "D";
    top = lo - 1;
    start = end + 1;
  }
  return path;
}

std::vector<int> theta_inv_word(std::string_view path) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  while (i < path.size()) {
    std::size_t j = i;
    int h = 0;
    do {
      h += path[j] == 'U' ? 1 : -1;
      ++j;
    } while (h > 0);
    std::vector<int> inner = theta_inv_word(path.substr(i + 1, j - i - 2));
    std::reverse(inner.begin(), inner.end());
    std::vector<int> block{1};
    for (int v : inner) block.push_back(v + 1);
    block.push_back(static_cast<int>(inner.size()) + 2);
    blocks.push_back(std::move(block));
    i = j;
  }
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  std::vector<int> w;
  int top = total;
  for (const auto& b : blocks) {
    int base = top - static_cast<int>(b.size());
    for (int v : b) w.push_back(base + v);
    top = base;
  }
  return w;
}

}  // namespace

std::string theta(const Permutation& sigma) {
  if (sigma.size() % 2 != 0 || !is_doubly_alternating(sigma) || contains_pattern(sigma, Permutation({2, 4, 1, 3})))
    fail(Errc::not_in_domain, sigma.str() + " is not a 2413-avoiding doubly alternating permutation of even size");
  return theta_word(sigma.word);
}

Permutation theta_inv(std::string_view path) {
  if (!is_dyck_path(path)) fail(Errc::invalid_argument, "not a Dyck path: " + std::string(path));
  return Permutation(theta_inv_word(path));
}

namespace {

std::vector<int> check_tau(const std::vector<int>& tau) {
  std::vector<int> s(tau);
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 3) fail(Errc::invalid_argument, "tau must be a permutation of 3..m");
  if (tau.empty()) fail(Errc::invalid_argument, "tau must be nonempty");
  return standardize(tau);
}

}  // namespace

std::vector<int> parse_tau(std::string_view text) {
  std::vector<int> tau;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') fail(Errc::parse_error, "bad tau: " + std::string(text));
      tau.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string part(text.substr(pos, next - pos));
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::parse_error, "bad tau: " + std::string(text));
      tau.push_back(std::stoi(part));
      pos = next + 1;
    }
  }
  // Accept the standardized form (1,2) as well as (3,4).
  if (!tau.empty() && *std::min_element(tau.begin(), tau.end()) == 1)
    for (int& v : tau) v += 2;
  check_tau(tau);
  return tau;
}


Permutation pattern_12tau(const std::vector<int>& tau) {
  check_tau(tau);
  std::vector<int> w{1, 2};
  w.insert(w.end(), tau.begin(), tau.end());
  return Permutation(w);
}

Permutation pattern_21tau(const std::vector<int>& tau) {
  check_tau(tau);
  std::vector<int> w{2, 1};
  w.insert(w.end(), tau.begin(), tau.end());
  return Permutation(w);
}

ActiveRegion active_region(const Permutation& sigma, const std::vector<int>& tau) {
  const Permutation tau_std(check_tau(tau));
  const int n = sigma.size();
  // se[i][v]: some occurrence of tau uses only rows > i and values > v.
  std::vector<std::vector<char>> se(static_cast<std::size_t>(n) + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int v = 0; v <= n; ++v) {
      std::vector<int> sub;
      for (int r = i + 1; r <= n; ++r)
        if (sigma(r) > v) sub.push_back(sigma(r));
      se[i][v] = static_cast<int>(sub.size()) >= tau_std.size() && contains_pattern(Permutation(standardize(sub)), tau_std);
    }
  ActiveRegion ar;
  Partition lambda(static_cast<std::size_t>(n), 0);
  std::set<Dot> active;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      int v = std::max(sigma(i1), sigma(i2));
      if (!se[i2][v]) continue;
      Dot d1{i1, sigma(i1)}, d2{i2, sigma(i2)};
      ar.pairs.push_back({d1, d2});
      active.insert(d1);
      active.insert(d2);
      for (int r = 0; r < i2; ++r) lambda[r] = std::max(lambda[r], v);
    }
  ar.lambda = trim_partition(lambda);
  ar.active.assign(active.begin(), active.end());
  for (const Dot& d : ar.active)
    if (d.first % 2 == 0 || d.second % 2 == 0) ar.parity_ok = false;
  for (int i = 1; i <= n; ++i)
    if (i <= static_cast<int>(ar.lambda.size()) && sigma(i) <= ar.lambda[i - 1]) ar.placement.push_back({i, sigma(i)});
  ar.placement_12_avoiding = placement_avoids(ar.lambda, ar.placement, Monotone::decreasing);
  ar.placement_21_avoiding = placement_avoids(ar.lambda, ar.placement, Monotone::increasing);
  return ar;
}

namespace {

bool in_diagram(const Partition& d, int r, int c) { return r >= 1 && r <= static_cast<int>(d.size()) && c >= 1 && c <= d[r - 1]; }

}  // namespace

bool placement_avoids(const Partition& diagram, const std::vector<Dot>& dots, Monotone direction) {
  for (std::size_t a = 0; a < dots.size(); ++a)
    for (std::size_t b = 0; b < dots.size(); ++b) {
      const Dot& u = dots[a];
      const Dot& l = dots[b];
      if (u.first >= l.first) continue;
      // u is the upper dot. 12: u left of l; 21: u right of l.
      if (direction == Monotone::decreasing && u.second < l.second && in_diagram(diagram, l.first, l.second)) return false;
      if (direction == Monotone::increasing && u.second > l.second && in_diagram(diagram, l.first, u.second)) return false;
    }
  return true;
}

std::vector<Dot> unique_monotone_placement(const Partition& diagram, const std::vector<int>& rows_in,
                                           const std::vector<int>& cols_in, Monotone direction) {
  if (rows_in.size() != cols_in.size()) fail(Errc::no_placement, "row and column sets differ in size");
  std::vector<int> rows(rows_in), cols(cols_in);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<bool> used(cols.size(), false);
  std::vector<Dot> out;
  // Lowest (shortest) rows first; the legal column sets are nested, so the
  // choice inside a row never affects feasibility.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    int r = *it, pick = -1;
    for (std::size_t q = 0; q < cols.size(); ++q) {
      if (used[q] || !in_diagram(diagram, r, cols[q])) continue;
      if (direction == Monotone::decreasing) {
        pick = static_cast<int>(q);
        break;
      }
      pick = static_cast<int>(q);
    }
    if (pick < 0) fail(Errc::no_placement, "no column left for row " + std::to_string(r));
    used[pick] = true;
    out.push_back({r, cols[pick]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Dot>> monotone_placements_exhaustive(const Partition& diagram, const std::vector<int>& rows_in,
                                                             const std::vector<int>& cols_in, Monotone direction) {
  std::vector<std::vector<Dot>> out;
  if (rows_in.size() != cols_in.size()) return out;
  std::vector<int> rows(rows_in), cols(cols_in);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  do {
    std::vector<Dot> dots;
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) {
      ok = in_diagram(diagram, rows[i], cols[i]);
      dots.push_back({rows[i], cols[i]});
    }
    if (ok && placement_avoids(diagram, dots, direction)) out.push_back(dots);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

namespace {

Permutation replace_region(const Permutation& sigma, const std::vector<int>& tau, Monotone target) {
  ActiveRegion ar = active_region(sigma, tau);
  std::vector<int> rows, cols;
  for (const Dot& d : ar.placement) {
    rows.push_back(d.first);
    cols.push_back(d.second);
  }
  std::vector<int> w = sigma.word;
  for (const Dot& d : unique_monotone_placement(ar.lambda, rows, cols, target)) w[d.first - 1] = d.second;
  return Permutation(w);
}

}  // namespace

Permutation psi(const Permutation& sigma, const std::vector<int>& tau) {
  if (!is_doubly_alternating(sigma) || contains_pattern(sigma, pattern_12tau(tau)))
    fail(Errc::not_in_domain, sigma.str() + " is not a doubly alternating " + pattern_12tau(tau).str() + "-avoider");
  return replace_region(sigma, tau, Monotone::increasing);
}

Permutation psi_inv(const Permutation& sigma, const std::vector<int>& tau) {
  if (!is_doubly_alternating(sigma) || contains_pattern(sigma, pattern_21tau(tau)))
    fail(Errc::not_in_domain, sigma.str() + " is not a doubly alternating " + pattern_21tau(tau).str() + "-avoider");
  return replace_region(sigma, tau, Monotone::decreasing);
}

std::vector<Dot> inactive_dots(const Permutation& sigma, const std::vector<int>& tau) {
  ActiveRegion ar = active_region(sigma, tau);
  std::vector<Dot> out;
  for (int i = 1; i <= sigma.size(); ++i) {
    Dot d{i, sigma(i)};
    if (!std::binary_search(ar.active.begin(), ar.active.end(), d)) out.push_back(d);
  }
  return out;
}

}  // namespace permutoria
