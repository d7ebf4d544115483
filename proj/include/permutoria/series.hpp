#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permutoria/common.hpp"

namespace permutoria {

struct Orders {
  int x = 0, y = 0, z = 0;
  bool operator==(const Orders&) const = default;
};

Orders parse_orders(std::string_view text);  // "6,4,4" or "6"

// Truncated power series in x, y, z with exact integer coefficients. A
// coefficient (i, j, k) is kept when i <= x, j <= y and k <= z.
class MultiSeries {
 public:
  MultiSeries() : MultiSeries(Orders{}) {}
  explicit MultiSeries(Orders o);

  static MultiSeries constant(Int c, Orders o);
  static MultiSeries variable(char v, Orders o);

  const Orders& orders() const { return o_; }
  Int get(int i, int j, int k) const;
  void set(int i, int j, int k, Int v);
  void add_to(int i, int j, int k, Int v);
  bool in_range(int i, int j, int k) const { return i >= 0 && j >= 0 && k >= 0 && i <= o_.x && j <= o_.y && k <= o_.z; }
  bool is_zero() const;

  MultiSeries operator+(const MultiSeries& b) const;
  MultiSeries operator-(const MultiSeries& b) const;
  MultiSeries operator-() const;
  MultiSeries operator*(const MultiSeries& b) const;
  MultiSeries operator/(const MultiSeries& b) const;
  MultiSeries inverse() const;  // NonUnitDivisor unless the constant term is +-1
  MultiSeries pow(int e) const;
  MultiSeries shifted(char v) const;  // multiply by a variable
  MultiSeries scaled(Int c) const;

  // c(u) from c = 1 + u c^2; u must have zero constant term.
  static MultiSeries catalan_of(const MultiSeries& u);

  MultiSeries swap_yz() const;

  bool operator==(const MultiSeries& b) const;

  // One line per coefficient "i<TAB>j<TAB>k<TAB>value" over cells with
  // i + j + k <= max_total, in lexicographic order.
  std::string dump(int max_total) const;

  // Coefficient list of x^0..x^order at y = z = 0.
  std::vector<Int> x_coefficients() const;

 private:
  std::size_t index(int i, int j, int k) const;
  void require_same(const MultiSeries& b) const;

  Orders o_;
  std::vector<Int> c_;
};

struct Cell {
  int i = 0, j = 0, k = 0;
};

// First cell (lexicographic, total degree <= max_total) where a and b differ.
bool first_difference(const MultiSeries& a, const MultiSeries& b, int max_total, Cell& where);

// Expression trees for the generating-function formulas.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, add, sub, mul, div, neg, pow, catalan };
  Kind kind = Kind::number;
  Int value = 0;
  char var = 'x';
  int exponent = 1;
  ExprPtr a, b;
};

// Infix grammar: integers, x, y, z, + - * / ^, parentheses, juxtaposition
// as multiplication and the builtin c(...) (the Catalan series of its
// argument).
ExprPtr parse_expr(std::string_view text);
std::string expr_to_string(const ExprPtr& e);
MultiSeries expand(const ExprPtr& e, Orders o);
MultiSeries expand_rational(std::string_view text, Orders o);

}  // namespace permutoria
