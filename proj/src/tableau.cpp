#include "permutoria/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace permutoria {

namespace {

int to_int(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(Errc::parse_error, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition trim_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition pad_partition(Partition p, int rows) {
  p = trim_partition(std::move(p));
  if (static_cast<int>(p.size()) > rows) fail(Errc::invalid_argument, "partition " + partition_str(p) + " has more than " + std::to_string(rows) + " parts");
  p.resize(static_cast<std::size_t>(rows), 0);
  return p;
}

Partition parse_partition(std::string_view text) {
  text = strip(text);
  Partition p;
  if (text.empty() || text == "-" || text == "()") return p;
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  for (auto part : split(text, ',')) p.push_back(to_int(strip(part), "partition part"));
  if (!is_partition(p)) fail(Errc::parse_error, "not a partition: '" + std::string(text) + "'");
  return trim_partition(p);
}

std::string partition_str(const Partition& p) {
  Partition t = trim_partition(p);
  if (t.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition t = trim_partition(p);
  Partition c(t.empty() ? 0 : static_cast<std::size_t>(t[0]), 0);
  for (int v : t)
    for (int j = 0; j < v; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    int o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

Box minimal_box(const Partition& outer) {
  Partition t = trim_partition(outer);
  return Box{static_cast<int>(t.size()), t.empty() ? 0 : t[0]};
}

SkewShape SkewShape::make(Partition outer, Partition inner, std::optional<Box> box) {
  if (!is_partition(outer) || !is_partition(inner)) fail(Errc::invalid_argument, "shape parts must be partitions");
  if (!contains(outer, inner))
    fail(Errc::invalid_argument, "inner " + partition_str(inner) + " not inside outer " + partition_str(outer));
  Box b = box ? *box : minimal_box(outer);
  Partition t = trim_partition(outer);
  if (static_cast<int>(t.size()) > b.rows || (!t.empty() && t[0] > b.cols))
    fail(Errc::invalid_argument, "shape " + partition_str(outer) + " exceeds box " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
  SkewShape s;
  s.outer = pad_partition(std::move(outer), b.rows);
  s.inner = pad_partition(std::move(inner), b.rows);
  s.box = b;
  return s;
}

SkewShape SkewShape::straight(Partition lambda, std::optional<Box> box) { return make(std::move(lambda), {}, box); }

int SkewShape::size() const { return partition_size(outer) - partition_size(inner); }

bool SkewShape::is_partition_shaped() const {
  for (int v : inner)
    if (v) return false;
  return true;
}

bool SkewShape::same_cells(const SkewShape& o) const {
  std::size_t n = std::max(outer.size(), o.outer.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a0 = i < inner.size() ? inner[i] : 0, a1 = i < outer.size() ? outer[i] : 0;
    int b0 = i < o.inner.size() ? o.inner[i] : 0, b1 = i < o.outer.size() ? o.outer[i] : 0;
    bool ea = a0 == a1, eb = b0 == b1;
    if (ea != eb) return false;
    if (!ea && (a0 != b0 || a1 != b1)) return false;
  }
  return true;
}

SkewShape SkewShape::rotated() const {
  SkewShape s;
  s.box = box;
  const int l = box.rows, k = box.cols;
  s.outer.resize(static_cast<std::size_t>(l));
  s.inner.resize(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    s.outer[i] = k - inner[l - 1 - i];
    s.inner[i] = k - outer[l - 1 - i];
  }
  return s;
}

std::string SkewShape::str() const {
  std::string s = partition_str(outer);
  if (!is_partition_shaped()) s += "/" + partition_str(inner);
  return s + " in " + std::to_string(box.rows) + "x" + std::to_string(box.cols);
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::lr: return "lr";
    case Orientation::anti_lr: return "anti-lr";
    default: return "none";
  }
}

bool SkewTableau::in_shape(int r, int c) const {
  return r >= 0 && r < shape.rows() && c >= shape.inner[r] && c < shape.outer[r];
}

int SkewTableau::at(int r, int c) const { return in_shape(r, c) ? rows[r][c - shape.inner[r]] : 0; }

std::vector<int> SkewTableau::weight() const {
  std::vector<int> w(static_cast<std::size_t>(letters()), 0);
  for (const auto& row : rows)
    for (int v : row)
      if (v >= 1 && v <= letters()) ++w[v - 1];
  return w;
}

bool SkewTableau::operator==(const SkewTableau& o) const {
  if (!shape.same_cells(o.shape)) return false;
  std::size_t n = std::max(rows.size(), o.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool ea = i >= rows.size() || rows[i].empty();
    bool eb = i >= o.rows.size() || o.rows[i].empty();
    if (ea != eb) return false;
    if (!ea && rows[i] != o.rows[i]) return false;
  }
  return true;
}

bool SkewTableau::identical(const SkewTableau& o) const {
  return shape == o.shape && companion_box == o.companion_box && companion == o.companion && rows == o.rows;
}

std::string SkewTableau::str() const {
  int last = shape.rows();
  while (last > 0 && shape.outer[last - 1] == 0) --last;
  if (last == 0) return "-";
  std::string s;
  for (int i = 0; i < last; ++i) {
    if (i) s += '/';
    bool first = true;
    for (int c = 0; c < shape.inner[i]; ++c) {
      if (!first) s += ',';
      s += '.';
      first = false;
    }
    for (int v : rows[i]) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
  }
  return s;
}

void check_tableau(const SkewTableau& t) {
  if (static_cast<int>(t.rows.size()) != t.shape.rows()) fail(Errc::not_a_tableau, "row count does not match shape");
  for (int i = 0; i < t.shape.rows(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape.row_length(i))
      fail(Errc::not_a_tableau, "row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      int v = t.rows[i][j];
      if (v < 1 || v > t.letters())
        fail(Errc::not_a_tableau, "value " + std::to_string(v) + " outside 1.." + std::to_string(t.letters()));
      if (j > 0 && t.rows[i][j - 1] > v) fail(Errc::not_a_tableau, "row " + std::to_string(i + 1) + " decreases");
      int c = t.shape.inner[i] + static_cast<int>(j);
      if (t.in_shape(i - 1, c) && t.at(i - 1, c) >= v)
        fail(Errc::not_a_tableau, "column " + std::to_string(c + 1) + " not strictly increasing at row " + std::to_string(i + 1));
    }
  }
}

SkewTableau make_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows, std::optional<int> letters,
                         std::optional<SkewShape> companion, Orientation o) {
  SkewTableau t;
  t.shape = shape;
  rows.resize(static_cast<std::size_t>(shape.rows()));
  t.rows = std::move(rows);
  int mx = 0;
  for (const auto& r : t.rows)
    for (int v : r) mx = std::max(mx, v);
  int m = letters ? *letters : (companion ? companion->box.rows : mx);
  t.companion_box = Box{m, 0};
  check_tableau(t);
  t.orientation = o;
  if (companion) {
    t = with_companion(std::move(t), *companion);
  } else {
    SkewShape c = default_companion(t);
    t.companion_box = c.box;
    t.companion = std::move(c);
  }
  return t;
}

SkewTableau parse_tableau(std::string_view text, std::optional<int> letters) {
  text = strip(text);
  Partition outer, inner;
  std::vector<std::vector<int>> rows;
  if (!text.empty() && text != "-") {
    for (auto row : split(text, '/')) {
      int in = 0;
      std::vector<int> vals;
      row = strip(row);
      if (!row.empty()) {
        for (auto cell : split(row, ',')) {
          cell = strip(cell);
          if (cell == ".") {
            if (!vals.empty()) fail(Errc::parse_error, "inner cell after a value in '" + std::string(row) + "'");
            ++in;
          } else {
            vals.push_back(to_int(cell, "tableau entry"));
          }
        }
      }
      inner.push_back(in);
      outer.push_back(in + static_cast<int>(vals.size()));
      rows.push_back(std::move(vals));
    }
  }
  if (!is_partition(outer) || !is_partition(inner)) fail(Errc::parse_error, "rows do not form a skew shape");
  SkewShape s = SkewShape::make(outer, inner);
  rows.resize(static_cast<std::size_t>(s.rows()));
  return make_tableau(s, std::move(rows), letters);
}

std::vector<int> reading_word(const SkewTableau& t) {
  std::vector<int> w;
  for (const auto& row : t.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

bool is_yamanouchi(const std::vector<int>& w) {
  std::vector<int> cnt;
  for (int v : w) {
    if (v < 1) return false;
    if (static_cast<int>(cnt.size()) < v) cnt.resize(static_cast<std::size_t>(v), 0);
    ++cnt[v - 1];
    if (v > 1 && cnt[v - 1] > cnt[v - 2]) return false;
  }
  return true;
}

bool is_lr(const SkewTableau& t) { return is_yamanouchi(reading_word(t)); }

bool is_anti_lr(const SkewTableau& t) { return is_lr(rotate(t)); }

Matrix recording_matrix(const SkewTableau& t) {
  Matrix m(static_cast<std::size_t>(t.shape.rows()), std::vector<int>(static_cast<std::size_t>(t.letters()), 0));
  for (int i = 0; i < t.shape.rows(); ++i)
    for (int v : t.rows[i]) ++m[i][v - 1];
  return m;
}

Matrix transpose(const Matrix& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  Matrix r(cols, std::vector<int>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j][i] = m[i][j];
  return r;
}

Matrix rotate180(const Matrix& m) {
  Matrix r(m.rbegin(), m.rend());
  for (auto& row : r) std::reverse(row.begin(), row.end());
  return r;
}

Matrix reverse_rows(const Matrix& m) { return Matrix(m.rbegin(), m.rend()); }

std::vector<std::vector<int>> fill_from_recording(const SkewShape& shape, const Matrix& m) {
  const int l = shape.rows();
  for (std::size_t i = static_cast<std::size_t>(l); i < m.size(); ++i)
    for (int v : m[i])
      if (v) fail(Errc::invalid_argument, "recording matrix has more rows than the shape");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    if (static_cast<std::size_t>(i) < m.size())
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (m[i][j] < 0) fail(Errc::invalid_argument, "negative recording entry");
        rows[i].insert(rows[i].end(), static_cast<std::size_t>(m[i][j]), static_cast<int>(j) + 1);
      }
    if (static_cast<int>(rows[i].size()) != shape.row_length(i))
      fail(Errc::invalid_argument, "recording row " + std::to_string(i + 1) + " sums to " + std::to_string(rows[i].size()) +
                                       ", shape row has " + std::to_string(shape.row_length(i)) + " cells");
    if (i == 0) continue;
    for (int c = std::max(shape.inner[i], shape.inner[i - 1]); c < std::min(shape.outer[i], shape.outer[i - 1]); ++c)
      if (rows[i - 1][c - shape.inner[i - 1]] >= rows[i][c - shape.inner[i]])
        fail(Errc::not_a_tableau, "column " + std::to_string(c + 1) + " not strictly increasing at row " + std::to_string(i + 1));
  }
  return rows;
}

SkewTableau tableau_from_recording(const SkewShape& shape, const Matrix& m, int letters) {
  return make_tableau(shape, fill_from_recording(shape, m), letters);
}

SkewShape default_companion(const SkewTableau& t) {
  const int m = t.letters();
  Matrix mt = transpose(recording_matrix(t));
  if (static_cast<int>(mt.size()) < m) mt.resize(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> crow(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    for (std::size_t i = 0; i < mt[j].size(); ++i)
      crow[j].insert(crow[j].end(), static_cast<std::size_t>(mt[j][i]), static_cast<int>(i) + 1);
  Partition nu(static_cast<std::size_t>(m), 0), kappa(static_cast<std::size_t>(m), 0);
  for (int j = m - 1; j >= 0; --j) {
    const int len = static_cast<int>(crow[j].size());
    int kb = j + 1 < m ? kappa[j + 1] : 0, nb = j + 1 < m ? nu[j + 1] : 0;
    int k = std::max(kb, nb - len);
    for (;; ++k) {
      bool ok = true;
      if (j + 1 < m)
        for (int c = std::max(k, kb); c < std::min(k + len, nb) && ok; ++c)
          if (crow[j][c - k] >= crow[j + 1][c - kb]) ok = false;
      if (ok) break;
    }
    kappa[j] = k;
    nu[j] = k + len;
  }
  Box b{m, m ? nu[0] : 0};
  return SkewShape::make(nu, kappa, b);
}

bool is_dominant(const SkewTableau& t, const SkewShape& companion) {
  if (companion.rows() != t.letters()) return false;
  try {
    fill_from_recording(companion, transpose(recording_matrix(t)));
  } catch (const Error&) {
    return false;
  }
  return true;
}

SkewTableau with_companion(SkewTableau t, const SkewShape& companion) {
  if (companion.rows() != t.letters())
    fail(Errc::not_dominant, "companion box has " + std::to_string(companion.rows()) + " rows, tableau uses " +
                                 std::to_string(t.letters()) + " letters");
  if (!is_dominant(t, companion)) fail(Errc::not_dominant, "tableau is not " + companion.str() + "-dominant");
  t.companion_box = companion.box;
  t.companion = companion;
  return t;
}

SkewTableau with_boxes(SkewTableau t, Box shape_box, Box companion_box) {
  SkewShape s = SkewShape::make(t.shape.outer, t.shape.inner, shape_box);
  std::vector<std::vector<int>> rows = t.rows;
  rows.resize(static_cast<std::size_t>(shape_box.rows));
  for (std::size_t i = t.rows.size(); i < rows.size(); ++i) rows[i].clear();
  for (std::size_t i = rows.size(); i < t.rows.size(); ++i)
    if (!t.rows[i].empty()) fail(Errc::invalid_argument, "shape does not fit the new box");
  std::optional<SkewShape> comp;
  if (t.companion) comp = SkewShape::make(t.companion->outer, t.companion->inner, companion_box);
  SkewTableau r;
  r.shape = s;
  r.rows = std::move(rows);
  r.companion_box = companion_box;
  check_tableau(r);
  r.orientation = t.orientation;
  if (comp) r = with_companion(std::move(r), *comp);
  return r;
}

SkewTableau companion_tableau(const SkewTableau& t) {
  if (!t.companion) fail(Errc::not_dominant, "tableau has no companion shape");
  SkewTableau r;
  try {
    r.rows = fill_from_recording(*t.companion, transpose(recording_matrix(t)));
  } catch (const Error& e) {
    fail(Errc::not_dominant, std::string("companion fill failed: ") + e.what());
  }
  r.shape = *t.companion;
  r.companion_box = t.shape.box;
  r.companion = t.shape;
  r.orientation = Orientation::none;
  return r;
}

SkewTableau rotate(const SkewTableau& t) {
  SkewTableau r;
  r.shape = t.shape.rotated();
  r.companion_box = t.companion_box;
  if (t.companion) r.companion = t.companion->rotated();
  const int l = t.shape.rows(), m = t.letters();
  r.rows.resize(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    const auto& src = t.rows[l - 1 - i];
    for (auto it = src.rbegin(); it != src.rend(); ++it) r.rows[i].push_back(m + 1 - *it);
  }
  r.orientation = t.orientation == Orientation::lr        ? Orientation::anti_lr
                  : t.orientation == Orientation::anti_lr ? Orientation::lr
                                                          : Orientation::none;
  return r;
}

SkewTableau canonical(const Partition& lambda, std::optional<Box> box) {
  SkewShape s = SkewShape::straight(lambda, box);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.rows()));
  for (int i = 0; i < s.rows(); ++i) rows[i].assign(static_cast<std::size_t>(s.outer[i]), i + 1);
  return make_tableau(s, std::move(rows), s.rows(), s, Orientation::lr);
}

SkewTableau canonical_rotated_shape(const Partition& lambda, std::optional<Box> box) {
  SkewShape s = SkewShape::straight(lambda, box);
  std::vector<SkewTableau> all = lr_list(s.rotated(), lambda);
  if (all.size() != 1)
    fail(Errc::canonical_assert_failed,
         "expected one LR tableau on the rotated shape of " + partition_str(lambda) + ", found " + std::to_string(all.size()));
  return all[0];
}

SkewTableau anti_canonical(const Partition& lambda, std::optional<Box> box) {
  return rotate(canonical_rotated_shape(lambda, box));
}

namespace {

struct Filler {
  const SkewShape& shape;
  int letters;
  const std::vector<int>* weight;
  const FillingVisitor& visit;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> rows;
  std::vector<int> used;

  void run() {
    if (weight && static_cast<int>(weight->size()) < letters) fail(Errc::invalid_argument, "weight shorter than the alphabet");
    for (int i = 0; i < shape.rows(); ++i)
      for (int c = shape.inner[i]; c < shape.outer[i]; ++c) cells.push_back({i, c});
    rows.resize(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) rows[i].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
    used.assign(static_cast<std::size_t>(letters), 0);
    go(0);
  }

  void go(std::size_t t) {
    if (t == cells.size()) {
      visit(rows);
      return;
    }
    auto [i, c] = cells[t];
    int lo = 1;
    if (c > shape.inner[i]) lo = rows[i][c - 1 - shape.inner[i]];
    if (i > 0 && c >= shape.inner[i - 1] && c < shape.outer[i - 1]) lo = std::max(lo, rows[i - 1][c - shape.inner[i - 1]] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (weight && used[v - 1] >= (*weight)[v - 1]) continue;
      rows[i][c - shape.inner[i]] = v;
      ++used[v - 1];
      go(t + 1);
      --used[v - 1];
    }
  }
};

SkewTableau with_default_companion(const SkewShape& shape, const std::vector<std::vector<int>>& rows, int letters) {
  SkewTableau tab;
  tab.shape = shape;
  tab.rows = rows;
  tab.companion_box = Box{letters, 0};
  SkewShape c = default_companion(tab);
  tab.companion_box = c.box;
  tab.companion = std::move(c);
  return tab;
}

}  // namespace

void enumerate_fillings(const SkewShape& shape, int letters, const std::vector<int>* weight, const FillingVisitor& visit) {
  Filler f{shape, letters, weight, visit, {}, {}, {}};
  f.run();
}

void enumerate_ssyt(const SkewShape& shape, int letters, const TableauVisitor& visit) {
  check_limit(std::max(shape.box.rows, shape.box.cols), Limits::get().box, "bounding box side");
  check_limit(letters, Limits::get().letters, "letters");
  enumerate_fillings(shape, letters, nullptr,
                     [&](const std::vector<std::vector<int>>& rows) { visit(with_default_companion(shape, rows, letters)); });
}

std::vector<SkewTableau> ssyt_list(const SkewShape& shape, int letters) {
  std::vector<SkewTableau> out;
  enumerate_ssyt(shape, letters, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

void enumerate_ssyt_weight(const SkewShape& shape, const std::vector<int>& weight, const TableauVisitor& visit) {
  if (partition_size(weight) != shape.size()) return;
  const int letters = static_cast<int>(weight.size());
  enumerate_fillings(shape, letters, &weight,
                     [&](const std::vector<std::vector<int>>& rows) { visit(with_default_companion(shape, rows, letters)); });
}

void enumerate_lr(const SkewShape& shape, const Partition& nu_in, const TableauVisitor& visit) {
  Partition nu = trim_partition(nu_in);
  if (partition_size(nu) != shape.size()) return;
  const Box box = shape.box;
  if (static_cast<int>(nu.size()) > box.rows || (!nu.empty() && nu[0] > box.cols)) return;
  const SkewShape comp = SkewShape::straight(nu, box);
  const int l = shape.rows();
  std::vector<std::pair<int, int>> cells;  // reading order
  for (int i = 0; i < l; ++i)
    for (int c = shape.outer[i] - 1; c >= shape.inner[i]; --c) cells.push_back({i, c});
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) rows[i].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
  std::vector<int> cnt(nu.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t t) {
    if (t == cells.size()) {
      SkewTableau tab;
      tab.shape = shape;
      tab.rows = rows;
      tab.companion_box = box;
      tab.companion = comp;
      tab.orientation = Orientation::lr;
      visit(tab);
      return;
    }
    auto [i, c] = cells[t];
    int lo = 1, hi = static_cast<int>(nu.size());
    if (c + 1 < shape.outer[i]) hi = std::min(hi, rows[i][c + 1 - shape.inner[i]]);
    if (i > 0 && c >= shape.inner[i - 1] && c < shape.outer[i - 1]) lo = rows[i - 1][c - shape.inner[i - 1]] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (cnt[v - 1] >= nu[v - 1]) continue;
      if (v > 1 && cnt[v - 1] + 1 > cnt[v - 2]) continue;
      rows[i][c - shape.inner[i]] = v;
      ++cnt[v - 1];
      go(t + 1);
      --cnt[v - 1];
    }
  };
  go(0);
}

std::vector<SkewTableau> lr_list(const SkewShape& shape, const Partition& nu) {
  std::vector<SkewTableau> out;
  enumerate_lr(shape, nu, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int mx) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = mx; v >= 1; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  return out;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int mx) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(left, mx); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string tableau_to_json(const SkewTableau& t) {
  nlohmann::ordered_json j;
  j["outer"] = trim_partition(t.shape.outer);
  j["inner"] = trim_partition(t.shape.inner);
  j["boxShape"] = {t.shape.box.rows, t.shape.box.cols};
  j["boxCompanion"] = {t.companion_box.rows, t.companion_box.cols};
  j["rows"] = t.rows;
  if (t.companion) j["companion"] = {{"outer", trim_partition(t.companion->outer)}, {"inner", trim_partition(t.companion->inner)}};
  j["orientation"] = orientation_name(t.orientation);
  return j.dump();
}

SkewTableau tableau_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("tableau JSON: ") + e.what());
  }
  try {
    Partition outer = j.at("outer").get<Partition>();
    Partition inner = j.value("inner", Partition{});
    std::optional<Box> box;
    if (j.contains("boxShape")) box = Box{j["boxShape"].at(0).get<int>(), j["boxShape"].at(1).get<int>()};
    SkewShape s = SkewShape::make(outer, inner, box);
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    std::optional<int> letters;
    std::optional<Box> cbox;
    if (j.contains("boxCompanion")) {
      cbox = Box{j["boxCompanion"].at(0).get<int>(), j["boxCompanion"].at(1).get<int>()};
      letters = cbox->rows;
    }
    std::optional<SkewShape> comp;
    if (j.contains("companion")) {
      const auto& c = j["companion"];
      Partition co = c.at("outer").get<Partition>(), ci = c.value("inner", Partition{});
      if (!cbox) {
        Box mb = minimal_box(co);
        cbox = Box{std::max(mb.rows, letters.value_or(0)), mb.cols};
        letters = cbox->rows;
      }
      comp = SkewShape::make(co, ci, cbox);
    }
    Orientation o = Orientation::none;
    std::string on = j.value("orientation", std::string("none"));
    if (on == "lr") o = Orientation::lr;
    else if (on == "anti-lr") o = Orientation::anti_lr;
    else if (on != "none") fail(Errc::parse_error, "unknown orientation '" + on + "'");
    SkewTableau t = make_tableau(s, std::move(rows), letters, comp, o);
    if (cbox && !comp) {
      // keep the requested companion box if the default companion fits in it
      SkewShape c = default_companion(t);
      if (c.box.cols <= cbox->cols) t = with_companion(t, SkewShape::make(c.outer, c.inner, cbox));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("tableau JSON: ") + e.what());
  }
}

std::string tableau_pretty(const SkewTableau& t) {
  int width = 1;
  for (const auto& r : t.rows)
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::ostringstream os;
  for (int i = 0; i < t.shape.rows(); ++i) {
    std::string line;
    for (int c = 0; c < t.shape.outer[i]; ++c) {
      std::string cell = c < t.shape.inner[i] ? "." : std::to_string(t.at(i, c));
      line += std::string(static_cast<std::size_t>(width) + 1 - cell.size(), ' ') + cell;
    }
    os << line << '\n';
  }
  return os.str();
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace permutoria
