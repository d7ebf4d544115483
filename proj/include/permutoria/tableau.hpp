#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutoria/common.hpp"

namespace permutoria {

// Weakly decreasing non-negative parts. Trailing zeros are allowed so that a
// partition can be padded to the height of a bounding box.
using Partition = std::vector<int>;

bool is_partition(const std::vector<int>& p);
Partition trim_partition(Partition p);
Partition pad_partition(Partition p, int rows);
Partition parse_partition(std::string_view text);  // "5,4,3,1"; "" or "0" is empty
std::string partition_str(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

struct Box {
  int rows = 0;
  int cols = 0;
  bool operator==(const Box&) const = default;
};

// (outer/inner) padded to box.rows; outer fits in the box.
struct SkewShape {
  Partition outer;
  Partition inner;
  Box box;

  static SkewShape make(Partition outer, Partition inner, std::optional<Box> box = std::nullopt);
  static SkewShape straight(Partition lambda, std::optional<Box> box = std::nullopt);

  int rows() const { return box.rows; }
  int row_length(int i) const { return outer[i] - inner[i]; }
  int size() const;
  bool is_partition_shaped() const;
  bool same_cells(const SkewShape& o) const;  // ignores the box
  SkewShape rotated() const;                  // mu^c / lambda^c inside the box
  std::string str() const;
  bool operator==(const SkewShape&) const = default;
};

Box minimal_box(const Partition& outer);

// Marks a tableau as a member of YT_Gamma (lr) or of the anti-LR family; it
// selects the branch of the fundamental symmetry map.
enum class Orientation { none, lr, anti_lr };
const char* orientation_name(Orientation o);

using Matrix = std::vector<std::vector<int>>;

// A semistandard filling of a bounded skew shape. letters() is the height of
// the companion box; values lie in 1..letters(). The companion shape, when
// present, lives in companion_box and certifies dominance.
struct SkewTableau {
  SkewShape shape;
  Box companion_box;
  std::optional<SkewShape> companion;
  Orientation orientation = Orientation::none;
  std::vector<std::vector<int>> rows;  // rows[i] covers columns inner[i]..outer[i]-1

  int letters() const { return companion_box.rows; }
  int size() const { return shape.size(); }
  bool in_shape(int r, int c) const;
  int at(int r, int c) const;  // 0 outside the shape
  std::vector<int> weight() const;

  // Cell contents and shape; boxes, companion and orientation ignored.
  bool operator==(const SkewTableau& o) const;
  // Also compares boxes and companion.
  bool identical(const SkewTableau& o) const;

  // ".,1,2/1,2,3/3,3" with '.' for inner cells.
  std::string str() const;
};

// Throws NotATableau when rows/columns break semistandardness or a value
// leaves 1..letters.
void check_tableau(const SkewTableau& t);

// Builds a tableau from explicit rows. letters defaults to the largest
// value, the shape box to the minimal one. A companion is attached via
// default_companion unless one is supplied.
SkewTableau make_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows, std::optional<int> letters = {},
                         std::optional<SkewShape> companion = {}, Orientation o = Orientation::none);
SkewTableau parse_tableau(std::string_view text, std::optional<int> letters = {});

std::vector<int> reading_word(const SkewTableau& t);
bool is_yamanouchi(const std::vector<int>& w);
bool is_lr(const SkewTableau& t);
bool is_anti_lr(const SkewTableau& t);  // rotation is LR

// l x letters matrix, l = shape box height.
Matrix recording_matrix(const SkewTableau& t);
Matrix transpose(const Matrix& m);
Matrix rotate180(const Matrix& m);
Matrix reverse_rows(const Matrix& m);

// Fills row i with m_{i1} ones, m_{i2} twos and so on. Throws NotATableau
// when a column fails to be strict, InvalidArgument on row-sum mismatch.
std::vector<std::vector<int>> fill_from_recording(const SkewShape& shape, const Matrix& m);
SkewTableau tableau_from_recording(const SkewShape& shape, const Matrix& m, int letters);

// A valid companion for t: rows of the companion are placed bottom-up as far
// left as the column and partition conditions allow. LR tableaux receive
// their partition-shaped companion.
SkewShape default_companion(const SkewTableau& t);

bool is_dominant(const SkewTableau& t, const SkewShape& companion);
SkewTableau with_companion(SkewTableau t, const SkewShape& companion);  // NotDominant
SkewTableau with_boxes(SkewTableau t, Box shape_box, Box companion_box);

// tau: the companion tableau, with shape and companion (and boxes) swapped.
SkewTableau companion_tableau(const SkewTableau& t);

// Rotation with respect to both bounding boxes; flips the orientation flag.
SkewTableau rotate(const SkewTableau& t);

// can(lambda): row i filled with i, minimal boxes unless given.
SkewTableau canonical(const Partition& lambda, std::optional<Box> box = std::nullopt);
// can(lambda^bullet): the LR tableau of the rotated shape.
SkewTableau canonical_rotated_shape(const Partition& lambda, std::optional<Box> box = std::nullopt);
// can(lambda^bullet)^bullet, shape lambda, anti-LR.
SkewTableau anti_canonical(const Partition& lambda, std::optional<Box> box = std::nullopt);

using TableauVisitor = std::function<void(const SkewTableau&)>;

using FillingVisitor = std::function<void(const std::vector<std::vector<int>>&)>;
// Raw row-major enumeration of semistandard fillings, no companion data and
// no size caps. weight, when given, fixes the number of each letter.
void enumerate_fillings(const SkewShape& shape, int letters, const std::vector<int>* weight, const FillingVisitor& visit);

// All semistandard fillings with values in 1..letters, in row-major
// lexicographic order. Tableaux get minimal companion data.
void enumerate_ssyt(const SkewShape& shape, int letters, const TableauVisitor& visit);
std::vector<SkewTableau> ssyt_list(const SkewShape& shape, int letters);
// Fillings of the given weight.
void enumerate_ssyt_weight(const SkewShape& shape, const std::vector<int>& weight, const TableauVisitor& visit);
// LR tableaux of shape outer/inner and weight nu, orientation lr, companion
// nu/0 in a box equal to the shape box.
void enumerate_lr(const SkewShape& shape, const Partition& nu, const TableauVisitor& visit);
std::vector<SkewTableau> lr_list(const SkewShape& shape, const Partition& nu);

// All partitions inside rows x cols, largest first.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_of(int n, int max_parts = -1);

std::string tableau_to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const std::string& text);
std::string tableau_pretty(const SkewTableau& t);
std::string matrix_str(const Matrix& m);

}  // namespace permutoria
