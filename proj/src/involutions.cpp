#include "permutoria/involutions.hpp"

#include <algorithm>
#include <map>

namespace permutoria {

namespace {

using Rows = std::vector<std::vector<int>>;

// One generator s_i on raw rows. Freeness is decided on the input before any
// cell changes.
void bk_apply(const SkewShape& sh, Rows& rows, int i) {
  const int l = sh.rows();
  auto val = [&](int r, int c) {
    if (r < 0 || r >= l || c < sh.inner[r] || c >= sh.outer[r]) return 0;
    return rows[r][c - sh.inner[r]];
  };
  std::vector<std::vector<std::size_t>> free_pos(static_cast<std::size_t>(l));
  std::vector<int> free_i(static_cast<std::size_t>(l), 0);
  for (int r = 0; r < l; ++r)
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      int v = rows[r][j], c = sh.inner[r] + static_cast<int>(j);
      if (v == i && val(r + 1, c) != i + 1) {
        free_pos[r].push_back(j);
        ++free_i[r];
      } else if (v == i + 1 && val(r - 1, c) != i) {
        free_pos[r].push_back(j);
      }
    }
  for (int r = 0; r < l; ++r) {
    const auto& pos = free_pos[r];
    const std::size_t b = pos.size() - static_cast<std::size_t>(free_i[r]);
    for (std::size_t q = 0; q < pos.size(); ++q) rows[r][pos[q]] = q < b ? i : i + 1;
  }
}

void bk_word_apply(const SkewShape& sh, Rows& rows, const BKWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) bk_apply(sh, rows, *it);
}

Orientation flip(Orientation o) {
  return o == Orientation::lr ? Orientation::anti_lr : o == Orientation::anti_lr ? Orientation::lr : Orientation::none;
}

Box max_box(Box a, Box b) { return Box{std::max(a.rows, b.rows), std::max(a.cols, b.cols)}; }


// Moves the tableau into another shape box of the same height or taller.
SkewTableau rebox(const SkewTableau& t, Box b) {
  if (t.shape.box == b) return t;
  for (std::size_t i = static_cast<std::size_t>(std::max(b.rows, 0)); i < t.rows.size(); ++i)
    if (!t.rows[i].empty() || t.shape.outer[i] != 0) fail(Errc::shape_mismatch, "shape does not fit box");
  SkewTableau r = t;
  Partition o = t.shape.outer, in = t.shape.inner;
  o.resize(std::min(o.size(), static_cast<std::size_t>(b.rows)));
  in.resize(o.size());
  r.shape = SkewShape::make(o, in, b);
  r.rows.resize(static_cast<std::size_t>(b.rows));
  return r;
}

Partition reversed_weight(const SkewTableau& t) {
  std::vector<int> w = t.weight();
  std::reverse(w.begin(), w.end());
  return w;
}

struct Grid {
  int l = 0, k = 0;
  std::vector<int> val;
  std::vector<char> own;  // 0 none, 1 first tableau, 2 second tableau, 3 done
  int& v(int r, int c) { return val[static_cast<std::size_t>(r * k + c)]; }
  char& o(int r, int c) { return own[static_cast<std::size_t>(r * k + c)]; }
  bool is(int r, int c, char who) { return r >= 0 && r < l && c >= 0 && c < k && o(r, c) == who; }
};

// Moves the hole at (r, c) outward through cells owned by `who`; returns the
// final hole position.
std::pair<int, int> slide_out(Grid& g, int r, int c, char who) {
  for (;;) {
    bool right = g.is(r, c + 1, who), below = g.is(r + 1, c, who);
    if (!right && !below) return {r, c};
    if (below && (!right || g.v(r + 1, c) <= g.v(r, c + 1))) {
      g.v(r, c) = g.v(r + 1, c);
      g.o(r, c) = who;
      g.o(r + 1, c) = 0;
      ++r;
    } else {
      g.v(r, c) = g.v(r, c + 1);
      g.o(r, c) = who;
      g.o(r, c + 1) = 0;
      ++c;
    }
  }
}

// Row r of the piece owned by `who` starts at column start[r].
Rows collect_rows(Grid& g, char who, const std::vector<int>& start, const std::vector<int>& count) {
  Rows rows(static_cast<std::size_t>(g.l));
  for (int r = 0; r < g.l; ++r)
    for (int c = start[r]; c < start[r] + count[r]; ++c) {
      if (g.o(r, c) != who) fail(Errc::not_a_tableau, "switched cells do not form a skew shape");
      rows[r].push_back(g.v(r, c));
    }
  return rows;
}

SkewTableau raw_tableau(const SkewShape& shape, Rows rows, Box companion_box) {
  SkewTableau t;
  t.shape = shape;
  t.rows = std::move(rows);
  t.rows.resize(static_cast<std::size_t>(shape.rows()));
  t.companion_box = companion_box;
  return t;
}

}  // namespace

std::vector<std::pair<int, int>> inner_corners(const SkewTableau& t) {
  std::vector<std::pair<int, int>> out;
  const auto& in = t.shape.inner;
  for (int r = 0; r < t.shape.rows(); ++r)
    if (in[r] > 0 && (r + 1 >= t.shape.rows() || in[r + 1] < in[r])) out.push_back({r, in[r] - 1});
  return out;
}

SkewTableau jdt_slide(const SkewTableau& t, int r, int c) {
  const int l = t.shape.rows();
  if (r < 0 || r >= l || c != t.shape.inner[r] - 1 || c < 0 || (r + 1 < l && t.shape.inner[r + 1] > c))
    fail(Errc::not_inner_corner, "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not an inner corner");
  Partition outer = t.shape.outer, inner = t.shape.inner;
  Rows rows = t.rows;
  // Work on absolute columns via per-row maps.
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(t.shape.box.cols), 0));
  for (int i = 0; i < l; ++i)
    for (int q = inner[i]; q < outer[i]; ++q) grid[i][q] = rows[i][q - inner[i]];
  inner[r] = c;
  auto in = [&](int i, int q) { return i < l && q >= inner[i] && q < outer[i]; };
  for (;;) {
    bool right = in(r, c + 1), below = in(r + 1, c);
    if (!right && !below) break;
    if (below && (!right || grid[r + 1][c] <= grid[r][c + 1])) {
      grid[r][c] = grid[r + 1][c];
      ++r;
    } else {
      grid[r][c] = grid[r][c + 1];
      ++c;
    }
  }
  outer[r] = c;
  SkewTableau out = t;
  out.shape = SkewShape::make(outer, inner, t.shape.box);
  for (int i = 0; i < l; ++i) out.rows[i].assign(grid[i].begin() + inner[i], grid[i].begin() + outer[i]);
  return out;
}

SkewTableau jdt(const SkewTableau& t) {
  SkewTableau cur = t;
  for (;;) {
    auto corners = inner_corners(cur);
    if (corners.empty()) return cur;
    cur = jdt_slide(cur, corners.back().first, corners.back().second);
  }
}

SkewTableau jdt_random(const SkewTableau& t, std::mt19937_64& rng) {
  SkewTableau cur = t;
  for (;;) {
    auto corners = inner_corners(cur);
    if (corners.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    auto [r, c] = corners[pick(rng)];
    cur = jdt_slide(cur, r, c);
  }
}

SkewTableau bender_knuth(const SkewTableau& t, int i) { return apply_bk_word(t, BKWord{i}); }

SkewTableau apply_bk_word(const SkewTableau& t, const BKWord& w) {
  for (int i : w)
    if (i < 1 || i + 1 > t.letters())
      fail(Errc::invalid_argument, "generator s_" + std::to_string(i) + " needs " + std::to_string(i + 1) + " letters, have " +
                                       std::to_string(t.letters()));
  SkewTableau r = raw_tableau(t.shape, t.rows, Box{t.letters(), 0});
  bk_word_apply(r.shape, r.rows, w);
  SkewShape c = default_companion(r);
  r.companion_box = c.box;
  r.companion = std::move(c);
  return r;
}

BKWord bk_z(int m) {
  BKWord w;
  for (int top = m - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return w;
}

BKWord bk_t(int k, int l, int d) {
  BKWord w;
  if (k <= 0) return w;
  for (int j = l; j >= 1; --j)
    for (int i = j; i <= j + k - 1; ++i) w.push_back(d + i);
  return w;
}

BKWord bk_concat(std::initializer_list<BKWord> parts) {
  BKWord w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

std::string bk_word_str(const BKWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t q = 0; q < w.size(); ++q) s += (q ? " s" : "s") + std::to_string(w[q]);
  return s;
}

namespace {

void check_adjacent(const SkewTableau& s, const SkewTableau& t) {
  std::size_t n = std::max(s.shape.outer.size(), t.shape.inner.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a = i < s.shape.outer.size() ? s.shape.outer[i] : 0;
    int b = i < t.shape.inner.size() ? t.shape.inner[i] : 0;
    if (a != b)
      fail(Errc::shape_mismatch, "outer shape of S (" + partition_str(s.shape.outer) + ") differs from inner shape of T (" +
                                     partition_str(t.shape.inner) + ")");
  }
}

}  // namespace

std::pair<SkewTableau, SkewTableau> tableau_switch(const SkewTableau& s_in, const SkewTableau& t_in) {
  check_adjacent(s_in, t_in);
  const Box box = max_box(s_in.shape.box, t_in.shape.box);
  const SkewTableau s = rebox(s_in, box), t = rebox(t_in, box);
  const int k = s.letters(), l = t.letters(), rows = box.rows;
  SkewShape u = SkewShape::make(t.shape.outer, s.shape.inner, box);
  Rows ur(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    ur[r] = s.rows[r];
    for (int v : t.rows[r]) ur[r].push_back(v + k);
  }
  bk_word_apply(u, ur, bk_t(k, l));
  Partition pi(static_cast<std::size_t>(rows));
  Rows tr(static_cast<std::size_t>(rows)), sr(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    int cnt = 0;
    for (int v : ur[r]) {
      if (v <= l) {
        tr[r].push_back(v);
        ++cnt;
      } else {
        sr[r].push_back(v - l);
      }
    }
    pi[r] = u.inner[r] + cnt;
  }
  SkewTableau t2 = raw_tableau(SkewShape::make(pi, s.shape.inner, box), std::move(tr), t.companion_box);
  t2.companion = t.companion;
  t2.orientation = t.orientation;
  SkewTableau s2 = raw_tableau(SkewShape::make(t.shape.outer, pi, box), std::move(sr), s.companion_box);
  s2.companion = s.companion;
  s2.orientation = s.orientation;
  return {t2, s2};
}

std::pair<SkewTableau, SkewTableau> tableau_switch_slides(const SkewTableau& s_in, const SkewTableau& t_in) {
  check_adjacent(s_in, t_in);
  const Box box = max_box(s_in.shape.box, t_in.shape.box);
  const SkewTableau s = rebox(s_in, box), t = rebox(t_in, box);
  Grid g;
  g.l = box.rows;
  g.k = box.cols;
  g.val.assign(static_cast<std::size_t>(g.l * g.k), 0);
  g.own.assign(static_cast<std::size_t>(g.l * g.k), 0);
  std::vector<std::tuple<int, int, int>> order;  // (value, column, row) of S cells
  for (int r = 0; r < g.l; ++r) {
    for (int c = s.shape.inner[r]; c < s.shape.outer[r]; ++c) {
      g.v(r, c) = s.at(r, c);
      g.o(r, c) = 1;
      order.push_back({s.at(r, c), c, r});
    }
    for (int c = t.shape.inner[r]; c < t.shape.outer[r]; ++c) {
      g.v(r, c) = t.at(r, c);
      g.o(r, c) = 2;
    }
  }
  std::sort(order.begin(), order.end(), std::greater<>());
  for (auto [v, c, r] : order) {
    g.o(r, c) = 0;
    auto [er, ec] = slide_out(g, r, c, 2);
    g.v(er, ec) = v;
    g.o(er, ec) = 3;
  }
  std::vector<int> tcount(static_cast<std::size_t>(g.l), 0), scount(static_cast<std::size_t>(g.l), 0);
  for (int r = 0; r < g.l; ++r)
    for (int c = 0; c < g.k; ++c) {
      if (g.o(r, c) == 2) ++tcount[r];
      if (g.o(r, c) == 3) ++scount[r];
    }
  Partition pi(static_cast<std::size_t>(g.l)), rest(static_cast<std::size_t>(g.l));
  for (int r = 0; r < g.l; ++r) {
    pi[r] = s.shape.inner[r] + tcount[r];
    rest[r] = t.shape.outer[r] - scount[r];
    if (pi[r] != rest[r]) fail(Errc::not_a_tableau, "switched pieces do not meet");
  }
  SkewShape tshape = SkewShape::make(pi, s.shape.inner, box), sshape = SkewShape::make(t.shape.outer, pi, box);
  Rows trows = collect_rows(g, 2, s.shape.inner, tcount), srows = collect_rows(g, 3, pi, scount);
  SkewTableau t2 = raw_tableau(tshape, std::move(trows), t.companion_box);
  t2.companion = t.companion;
  t2.orientation = t.orientation;
  SkewTableau s2 = raw_tableau(sshape, std::move(srows), s.companion_box);
  s2.companion = s.companion;
  s2.orientation = s.orientation;
  return {t2, s2};
}

SkewTableau schuetzenberger(const SkewTableau& t) {
  if (!t.shape.is_partition_shaped()) fail(Errc::not_partition_shaped, "Schuetzenberger involution needs a partition shape");
  SkewTableau r = t;
  bk_word_apply(r.shape, r.rows, bk_z(t.letters()));
  if (t.companion) r.companion = t.companion->rotated();
  r.orientation = flip(t.orientation);
  return r;
}

SkewTableau evacuation(const SkewTableau& t) {
  if (!t.shape.is_partition_shaped()) fail(Errc::not_partition_shaped, "evacuation needs a partition shape");
  const int m = t.letters();
  Grid g;
  g.l = t.shape.box.rows;
  g.k = t.shape.box.cols;
  g.val.assign(static_cast<std::size_t>(g.l * g.k), 0);
  g.own.assign(static_cast<std::size_t>(g.l * g.k), 0);
  int left = 0;
  for (int r = 0; r < g.l; ++r)
    for (int c = 0; c < t.shape.outer[r]; ++c) {
      g.v(r, c) = t.at(r, c);
      g.o(r, c) = 2;
      ++left;
    }
  for (; left > 0; --left) {
    int br = -1, bc = -1;
    for (int r = 0; r < g.l; ++r)
      for (int c = 0; c < g.k; ++c)
        if (g.o(r, c) == 2 && (br < 0 || g.v(r, c) < g.v(br, bc) || (g.v(r, c) == g.v(br, bc) && c > bc))) {
          br = r;
          bc = c;
        }
    int v = g.v(br, bc);
    g.o(br, bc) = 0;
    auto [er, ec] = slide_out(g, br, bc, 2);
    g.v(er, ec) = m + 1 - v;
    g.o(er, ec) = 3;
  }
  SkewTableau r = t;
  for (int i = 0; i < g.l; ++i)
    for (int c = 0; c < t.shape.outer[i]; ++c) {
      if (g.o(i, c) != 3) fail(Errc::not_a_tableau, "evacuation left a hole");
      r.rows[i][c] = g.v(i, c);
    }
  if (t.companion) r.companion = t.companion->rotated();
  r.orientation = flip(t.orientation);
  return r;
}

IntMatrix to_int_matrix(const Matrix& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
  return r;
}

TableauPair rsk_matrix(const IntMatrix& m) {
  const int a = static_cast<int>(m.size());
  const int b = a ? static_cast<int>(m[0].size()) : 0;
  Rows p, q;
  for (int i = 0; i < a; ++i) {
    if (static_cast<int>(m[i].size()) != b) fail(Errc::invalid_argument, "ragged matrix");
    for (int j = 0; j < b; ++j) {
      if (m[i][j] < 0) fail(Errc::invalid_argument, "negative matrix entry");
      for (std::int64_t rep = 0; rep < m[i][j]; ++rep) {
        int x = j + 1;
        std::size_t row = 0;
        for (;; ++row) {
          if (row == p.size()) {
            p.push_back({x});
            q.push_back({i + 1});
            break;
          }
          auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
          if (it == p[row].end()) {
            p[row].push_back(x);
            q[row].push_back(i + 1);
            break;
          }
          std::swap(x, *it);
        }
      }
    }
  }
  Partition shape;
  for (const auto& r : p) shape.push_back(static_cast<int>(r.size()));
  SkewShape s = SkewShape::straight(shape);
  return {make_tableau(s, p, b), make_tableau(s, q, a)};
}

IntMatrix rsk_matrix_inverse(const SkewTableau& p_in, const SkewTableau& q_in) {
  if (!p_in.shape.is_partition_shaped() || !q_in.shape.is_partition_shaped() || !p_in.shape.same_cells(q_in.shape))
    fail(Errc::shape_mismatch, "RSK inverse needs two partition-shaped tableaux of one shape");
  Rows p = p_in.rows, q = q_in.rows;
  IntMatrix m(static_cast<std::size_t>(q_in.letters()), std::vector<std::int64_t>(static_cast<std::size_t>(p_in.letters()), 0));
  for (int left = p_in.size(); left > 0; --left) {
    // The last insertion is the rightmost occurrence of the largest entry of Q.
    int br = -1;
    for (int r = 0; r < static_cast<int>(q.size()); ++r) {
      if (q[r].empty()) continue;
      if (br < 0 || q[r].back() > q[br].back() || (q[r].back() == q[br].back() && q[r].size() > q[br].size())) br = r;
    }
    int i = q[br].back();
    q[br].pop_back();
    int x = p[br].back();
    p[br].pop_back();
    for (int r = br - 1; r >= 0; --r) {
      auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
      --it;
      std::swap(x, *it);
    }
    ++m[i - 1][x - 1];
  }
  return m;
}

TableauPair rsk_tableau(const SkewTableau& t) {
  if (!t.companion) fail(Errc::not_dominant, "rsk needs the companion shape");
  SkewTableau p = jdt(t);
  SkewTableau q = jdt(companion_tableau(t));
  return {p, q};
}

SkewTableau rsk_tableau_inverse(const SkewTableau& p, const SkewTableau& q) {
  if (!p.shape.is_partition_shaped() || !q.shape.is_partition_shaped() || !p.shape.same_cells(q.shape))
    fail(Errc::shape_mismatch, "rsk inverse needs two partition-shaped tableaux of one shape");
  if (!p.companion || !q.companion) fail(Errc::not_dominant, "rsk inverse needs companion shapes on P and Q");
  SkewTableau tq = companion_tableau(q);
  tq.orientation = Orientation::lr;
  SkewTableau r = rho(tq);
  auto [can_part, t] = tableau_switch(rebox(p, max_box(p.shape.box, r.shape.box)), r);
  if (!(can_part == canonical(tq.shape.inner, tq.shape.box)))
    fail(Errc::canonical_assert_failed, "switching P past rho(tau(Q)) did not leave a canonical tableau");
  SkewTableau out = raw_tableau(SkewShape::make(t.shape.outer, t.shape.inner, q.companion_box), {}, p.companion_box);
  out.rows = t.rows;
  out.rows.resize(static_cast<std::size_t>(q.companion_box.rows));
  out.companion = p.companion;
  return out;
}

SkewTableau reversal_with(const SkewTableau& s, const SkewTableau& t) {
  if (!s.shape.is_partition_shaped()) fail(Errc::not_partition_shaped, "reversal needs a partition-shaped inner tableau");
  auto [t1, s1] = tableau_switch(s, t);
  SkewTableau u = schuetzenberger(t1);
  auto [s2, t2] = tableau_switch(u, s1);
  (void)s2;
  return rebox(t2, t.shape.box);
}

SkewTableau reversal(const SkewTableau& t) { return reversal_with(canonical(t.shape.inner, t.shape.box), t); }

namespace {

void require_orientation(const SkewTableau& t) {
  if (t.orientation == Orientation::lr) {
    if (!is_lr(t)) fail(Errc::not_lr, "tableau flagged LR is not Littlewood-Richardson: " + t.str());
  } else if (t.orientation == Orientation::anti_lr) {
    if (!is_anti_lr(t)) fail(Errc::not_lr, "tableau flagged anti-LR is not anti-Littlewood-Richardson: " + t.str());
  } else {
    fail(Errc::not_lr, "fundamental symmetry needs an LR or anti-LR flag");
  }
}

// Switches T past can(mu) or its anti-canonical partner and checks that the
// inner piece comes out as expected. The result lives in T's shape box with
// companion mu (or mu rotated) in that same box.
SkewTableau symmetry_switch(const SkewTableau& t, bool inner_canonical, bool expect_canonical, Orientation out) {
  const Box box = t.shape.box;
  const Partition mu = t.shape.inner;
  SkewTableau s = inner_canonical ? canonical(mu, box) : anti_canonical(mu, box);
  auto [first, second] = tableau_switch(s, t);
  const bool lr_weight = t.orientation == Orientation::lr;
  Partition nu = trim_partition(lr_weight ? t.weight() : reversed_weight(t));
  if (!is_partition(nu)) fail(Errc::not_lr, "weight is not a partition");
  Box cbox{t.letters(), std::max(t.companion_box.cols, nu.empty() ? 0 : nu[0])};
  SkewTableau want = expect_canonical ? canonical(nu, lr_weight ? std::optional<Box>() : std::optional<Box>(cbox))
                                      : anti_canonical(nu, cbox);
  if (!(first == want))
    fail(Errc::canonical_assert_failed, "inner piece " + first.str() + " is not the expected " + want.str());
  SkewTableau r = rebox(second, box);
  r.companion_box = box;
  SkewShape c = SkewShape::straight(mu, box);
  r.companion = out == Orientation::lr ? c : c.rotated();
  r.orientation = out;
  return r;
}

}  // namespace

SkewTableau rho(const SkewTableau& t) {
  require_orientation(t);
  if (t.orientation == Orientation::lr) return symmetry_switch(t, true, true, Orientation::lr);
  return symmetry_switch(t, false, false, Orientation::anti_lr);
}

SkewTableau rho_dual(const SkewTableau& t) {
  require_orientation(t);
  if (t.orientation == Orientation::lr) return symmetry_switch(t, false, true, Orientation::anti_lr);
  return symmetry_switch(t, true, false, Orientation::lr);
}

namespace {

// Column filling of box/lambda: each column numbered 1, 2, ... from its top.
SkewTableau outer_column_filling(const Partition& lambda, Box box) {
  SkewShape sh = SkewShape::make(Partition(static_cast<std::size_t>(box.rows), box.cols), lambda, box);
  Partition lc = conjugate(sh.inner);
  lc.resize(static_cast<std::size_t>(box.cols), 0);
  Rows rows(static_cast<std::size_t>(box.rows));
  for (int r = 0; r < box.rows; ++r)
    for (int c = sh.inner[r]; c < box.cols; ++c) rows[r].push_back(r - lc[c] + 1);
  SkewTableau t = raw_tableau(sh, std::move(rows), Box{box.rows, box.cols});
  check_tableau(t);
  t.orientation = Orientation::lr;
  return t;
}

}  // namespace

SkewTableau omega(const SkewTableau& t) {
  const Box box = t.shape.box;
  SkewTableau c1 = canonical(t.shape.inner, box);
  SkewTableau c2 = outer_column_filling(t.shape.outer, box);
  auto [t1, s] = tableau_switch(c1, t);
  auto [u, s2] = tableau_switch(s, c2);
  (void)s2;
  auto [v, t2] = tableau_switch(t1, u);
  (void)v;
  SkewTableau r = rebox(t2, box);
  r.orientation = t.orientation;
  return r;
}

SkewTableau omega_bk(const SkewTableau& t) {
  const Box box = t.shape.box;
  SkewTableau c1 = canonical(t.shape.inner, box);
  SkewTableau c2 = outer_column_filling(t.shape.outer, box);
  const int k = c1.letters(), l = t.letters(), m = c2.letters();
  SkewShape full = SkewShape::make(Partition(static_cast<std::size_t>(box.rows), box.cols), {}, box);
  Rows rows(static_cast<std::size_t>(box.rows));
  for (int r = 0; r < box.rows; ++r) {
    rows[r] = c1.rows[r];
    for (int v : t.rows[r]) rows[r].push_back(v + k);
    for (int v : c2.rows[r]) rows[r].push_back(v + k + l);
  }
  bk_word_apply(full, rows, bk_concat({bk_t(l, m), bk_t(k, m, l), bk_t(k, l)}));
  Partition outer(static_cast<std::size_t>(box.rows)), inner(static_cast<std::size_t>(box.rows));
  Rows out(static_cast<std::size_t>(box.rows));
  for (int r = 0; r < box.rows; ++r) {
    int below = 0;
    for (int v : rows[r]) {
      if (v <= m) ++below;
      else if (v <= m + l) out[r].push_back(v - m);
    }
    inner[r] = below;
    outer[r] = below + static_cast<int>(out[r].size());
  }
  SkewTableau r = raw_tableau(SkewShape::make(outer, inner, box), std::move(out), t.companion_box);
  r.companion = t.companion;
  r.orientation = t.orientation;
  return r;
}

bool jdt_equivalent(const SkewTableau& a, const SkewTableau& b) { return jdt(a) == jdt(b); }

bool dual_equivalent(const SkewTableau& a, const SkewTableau& b) {
  if (!a.shape.same_cells(b.shape)) fail(Errc::shape_mismatch, "dual equivalence compares tableaux of one shape");
  return jdt(companion_tableau(a)) == jdt(companion_tableau(b));
}

std::optional<SkewTableau> orient(const SkewTableau& t, Orientation o) {
  if (o == Orientation::none) return std::nullopt;
  SkewTableau u = t;
  u.companion_box = t.shape.box;
  for (const auto& row : u.rows)
    for (int v : row)
      if (v > u.letters()) return std::nullopt;
  if (o == Orientation::lr ? !is_lr(u) : !is_anti_lr(u)) return std::nullopt;
  std::vector<int> w = u.weight();
  if (o == Orientation::anti_lr) std::reverse(w.begin(), w.end());
  Partition nu = trim_partition(w);
  if (!nu.empty() && nu[0] > u.shape.box.cols) return std::nullopt;
  SkewShape c = SkewShape::straight(nu, u.shape.box);
  u.companion = o == Orientation::lr ? c : c.rotated();
  u.orientation = o;
  return u;
}

DiagramReport verify_diagram(const SkewTableau& t) {
  require_orientation(t);
  DiagramReport rep;
  auto check = [&](const char* name, const std::function<bool()>& f) {
    try {
      if (!f()) {
        rep.ok = false;
        rep.failures.push_back(std::string(name) + " fails on " + t.str());
      }
    } catch (const Error& e) {
      rep.ok = false;
      rep.failures.push_back(std::string(name) + ": " + errc_name(e.code()) + ": " + e.what());
    }
  };
  check("(chi rot rho)^3 = id", [&] {
    SkewTableau u = t;
    for (int q = 0; q < 3; ++q) u = reversal(rotate(rho(u)));
    return u == t && u.orientation == t.orientation;
  });
  check("chi rot = rot chi", [&] { return reversal(rotate(t)) == rotate(reversal(t)); });
  check("chi tau chi tau = rot", [&] { return reversal(companion_tableau(reversal(companion_tableau(t)))) == rotate(t); });
  check("tau rot = rot tau", [&] { return companion_tableau(rotate(t)).identical(rotate(companion_tableau(t))); });
  check("omega = rot chi = chi rot", [&] {
    SkewTableau o = omega(t);
    return o == rotate(reversal(t)) && o == reversal(rotate(t));
  });
  return rep;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!contains(lambda, mu)) return 0;
  if (partition_size(lambda) != partition_size(mu) + partition_size(nu)) return 0;
  SkewShape s = SkewShape::make(lambda, mu);
  std::int64_t n = 0;
  enumerate_lr(s, nu, [&](const SkewTableau&) { ++n; });
  return n;
}

namespace {

using Poly = std::map<std::vector<int>, std::int64_t>;

Poly schur(const Partition& lambda, int n) {
  Poly p;
  Partition t = trim_partition(lambda);
  if (static_cast<int>(t.size()) > n) return p;
  SkewShape s = SkewShape::straight(t);
  enumerate_fillings(s, n, nullptr, [&](const Rows& rows) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (const auto& r : rows)
      for (int v : r) ++e[v - 1];
    ++p[e];
  });
  return p;
}

}  // namespace

bool schur_product_check(const Partition& mu, const Partition& nu, int n) {
  Poly a = schur(mu, n), b = schur(nu, n), lhs, rhs;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      lhs[e] = checked_add(lhs[e], checked_mul(ca, cb));
    }
  for (const Partition& lambda : partitions_of(partition_size(mu) + partition_size(nu))) {
    std::int64_t c = lr_coefficient(lambda, mu, nu);
    if (c == 0) continue;
    for (const auto& [e, v] : schur(lambda, n)) rhs[e] = checked_add(rhs[e], checked_mul(c, v));
  }
  for (auto it = lhs.begin(); it != lhs.end();) it = it->second == 0 ? lhs.erase(it) : std::next(it);
  return lhs == rhs;
}

}  // namespace permutoria
