#include "permutoria/series.hpp"

#include <cctype>
#include <sstream>

namespace permutoria {

Orders parse_orders(std::string_view text) {
  std::vector<int> v;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      v.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad orders '" + std::string(text) + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') flush();
    else cur.push_back(ch);
  }
  flush();
  if (v.empty() || v.size() > 3) fail(Errc::parse_error, "orders need one to three integers");
  for (int x : v)
    if (x < 0) fail(Errc::parse_error, "negative order");
  Orders o;
  o.x = v[0];
  o.y = v.size() > 1 ? v[1] : 0;
  o.z = v.size() > 2 ? v[2] : 0;
  return o;
}

MultiSeries::MultiSeries(Orders o) : o_(o) {
  if (o.x < 0 || o.y < 0 || o.z < 0) fail(Errc::invalid_argument, "negative truncation order");
  c_.assign(static_cast<std::size_t>((o.x + 1) * (o.y + 1) * (o.z + 1)), 0);
}

std::size_t MultiSeries::index(int i, int j, int k) const {
  return static_cast<std::size_t>((i * (o_.y + 1) + j) * (o_.z + 1) + k);
}

MultiSeries MultiSeries::constant(Int c, Orders o) {
  MultiSeries s(o);
  s.c_[0] = c;
  return s;
}

MultiSeries MultiSeries::variable(char v, Orders o) {
  MultiSeries s(o);
  if (v == 'x' && o.x >= 1) s.set(1, 0, 0, 1);
  else if (v == 'y' && o.y >= 1) s.set(0, 1, 0, 1);
  else if (v == 'z' && o.z >= 1) s.set(0, 0, 1, 1);
  else if (v != 'x' && v != 'y' && v != 'z') fail(Errc::invalid_argument, std::string("unknown variable ") + v);
  return s;
}

Int MultiSeries::get(int i, int j, int k) const { return in_range(i, j, k) ? c_[index(i, j, k)] : 0; }

void MultiSeries::set(int i, int j, int k, Int v) {
  if (!in_range(i, j, k)) fail(Errc::invalid_argument, "coefficient outside truncation");
  c_[index(i, j, k)] = v;
}

void MultiSeries::add_to(int i, int j, int k, Int v) {
  if (!in_range(i, j, k)) return;
  Int& slot = c_[index(i, j, k)];
  slot = checked_add(slot, v);
}

bool MultiSeries::is_zero() const {
  for (Int v : c_)
    if (v) return false;
  return true;
}

void MultiSeries::require_same(const MultiSeries& b) const {
  if (!(o_ == b.o_)) fail(Errc::invalid_argument, "series truncation orders differ");
}

MultiSeries MultiSeries::operator+(const MultiSeries& b) const {
  require_same(b);
  MultiSeries r(o_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = checked_add(c_[t], b.c_[t]);
  return r;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r(o_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = checked_mul(c_[t], -1);
  return r;
}

MultiSeries MultiSeries::operator-(const MultiSeries& b) const { return *this + (-b); }

MultiSeries MultiSeries::operator*(const MultiSeries& b) const {
  require_same(b);
  MultiSeries r(o_);
  for (int i = 0; i <= o_.x; ++i)
    for (int j = 0; j <= o_.y; ++j)
      for (int k = 0; k <= o_.z; ++k) {
        const Int a = c_[index(i, j, k)];
        if (!a) continue;
        for (int p = 0; i + p <= o_.x; ++p)
          for (int q = 0; j + q <= o_.y; ++q)
            for (int s = 0; k + s <= o_.z; ++s) {
              const Int bb = b.c_[b.index(p, q, s)];
              if (!bb) continue;
              Int& slot = r.c_[r.index(i + p, j + q, k + s)];
              slot = checked_add(slot, checked_mul(a, bb));
            }
      }
  return r;
}

MultiSeries MultiSeries::inverse() const {
  const Int a0 = c_[0];
  if (a0 != 1 && a0 != -1) fail(Errc::non_unit_divisor, "division by a series whose constant term is not a unit");
  MultiSeries r(o_);
  for (int i = 0; i <= o_.x; ++i)
    for (int j = 0; j <= o_.y; ++j)
      for (int k = 0; k <= o_.z; ++k) {
        Int s = (i == 0 && j == 0 && k == 0) ? 1 : 0;
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q)
            for (int t = 0; t <= k; ++t) {
              if (p == 0 && q == 0 && t == 0) continue;
              const Int a = c_[index(p, q, t)];
              if (!a) continue;
              s = checked_add(s, -checked_mul(a, r.c_[index(i - p, j - q, k - t)]));
            }
        r.c_[index(i, j, k)] = checked_mul(s, a0);  // a0 is its own inverse
      }
  return r;
}

MultiSeries MultiSeries::operator/(const MultiSeries& b) const { return *this * b.inverse(); }

MultiSeries MultiSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  MultiSeries result = constant(1, o_);
  MultiSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiSeries MultiSeries::shifted(char v) const {
  MultiSeries r(o_);
  const int di = v == 'x', dj = v == 'y', dk = v == 'z';
  for (int i = 0; i + di <= o_.x; ++i)
    for (int j = 0; j + dj <= o_.y; ++j)
      for (int k = 0; k + dk <= o_.z; ++k) r.c_[r.index(i + di, j + dj, k + dk)] = c_[index(i, j, k)];
  return r;
}

MultiSeries MultiSeries::scaled(Int c) const {
  MultiSeries r(o_);
  for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = checked_mul(c_[t], c);
  return r;
}

MultiSeries MultiSeries::catalan_of(const MultiSeries& u) {
  if (u.get(0, 0, 0) != 0) fail(Errc::invalid_argument, "c(u) needs u with zero constant term");
  const Orders o = u.orders();
  MultiSeries one = constant(1, o);
  MultiSeries c = one;
  for (int it = 0; it <= o.x + o.y + o.z; ++it) c = one + u * c * c;
  return c;
}

MultiSeries MultiSeries::swap_yz() const {
  Orders o{o_.x, o_.z, o_.y};
  MultiSeries r(o);
  for (int i = 0; i <= o_.x; ++i)
    for (int j = 0; j <= o_.y; ++j)
      for (int k = 0; k <= o_.z; ++k) r.set(i, k, j, get(i, j, k));
  return r;
}

bool MultiSeries::operator==(const MultiSeries& b) const { return o_ == b.o_ && c_ == b.c_; }

std::string MultiSeries::dump(int max_total) const {
  std::ostringstream os;
  for (int i = 0; i <= o_.x; ++i)
    for (int j = 0; j <= o_.y; ++j)
      for (int k = 0; k <= o_.z; ++k)
        if (i + j + k <= max_total) os << i << '\t' << j << '\t' << k << '\t' << get(i, j, k) << '\n';
  return os.str();
}

std::vector<Int> MultiSeries::x_coefficients() const {
  std::vector<Int> v;
  for (int i = 0; i <= o_.x; ++i) v.push_back(get(i, 0, 0));
  return v;
}

bool first_difference(const MultiSeries& a, const MultiSeries& b, int max_total, Cell& where) {
  const Orders& o = a.orders();
  for (int i = 0; i <= o.x; ++i)
    for (int j = 0; j <= o.y; ++j)
      for (int k = 0; k <= o.z; ++k) {
        if (i + j + k > max_total) continue;
        if (a.get(i, j, k) != b.get(i, j, k)) {
          where = {i, j, k};
          return true;
        }
      }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Type { number, ident, op, end } type = end;
  Int value = 0;
  char ch = 0;
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().type != Token::end) error("unexpected trailing input");
    return e;
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char ch = text_[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        Token t{Token::number, 0, 0, i};
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
          t.value = checked_add(checked_mul(t.value, 10), text_[i] - '0');
          ++i;
        }
        toks_.push_back(t);
      } else if (ch == 'x' || ch == 'y' || ch == 'z' || ch == 'c') {
        toks_.push_back({Token::ident, 0, ch, i});
        ++i;
      } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
        toks_.push_back({Token::op, 0, ch, i});
        ++i;
      } else {
        fail(Errc::parse_error, "unexpected character '" + std::string(1, ch) + "' at " + std::to_string(i));
      }
    }
    toks_.push_back({Token::end, 0, 0, text_.size()});
  }

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool is_op(char c) const { return peek().type == Token::op && peek().ch == c; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse_error, msg + " at position " + std::to_string(peek().pos));
  }

  static ExprPtr node(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (is_op('+') || is_op('-')) {
      const char op = take().ch;
      e = node(op == '+' ? Expr::Kind::add : Expr::Kind::sub, e, term());
    }
    return e;
  }

  bool starts_primary() const {
    return peek().type == Token::number || peek().type == Token::ident || is_op('(');
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (is_op('*')) {
        take();
        e = node(Expr::Kind::mul, e, unary());
      } else if (is_op('/')) {
        take();
        e = node(Expr::Kind::div, e, unary());
      } else if (starts_primary()) {
        e = node(Expr::Kind::mul, e, power());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (is_op('-')) {
      take();
      return node(Expr::Kind::neg, unary());
    }
    if (is_op('+')) {
      take();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (is_op('^')) {
      take();
      int sign = 1;
      if (is_op('-')) {
        take();
        sign = -1;
      }
      if (peek().type != Token::number) error("integer exponent expected");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::pow;
      e->a = base;
      e->exponent = sign * static_cast<int>(take().value);
      return e;
    }
    return base;
  }

  ExprPtr primary() {
    const Token t = peek();
    if (t.type == Token::number) {
      take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->value = t.value;
      return e;
    }
    if (t.type == Token::ident) {
      take();
      if (t.ch == 'c') {
        ExprPtr arg;
        if (is_op('(')) {
          take();
          arg = expr();
          if (!is_op(')')) error("')' expected");
          take();
        } else {
          auto x = std::make_shared<Expr>();
          x->kind = Expr::Kind::variable;
          x->var = 'x';
          arg = x;
        }
        return node(Expr::Kind::catalan, arg);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::variable;
      e->var = t.ch;
      return e;
    }
    if (is_op('(')) {
      take();
      ExprPtr e = expr();
      if (!is_op(')')) error("')' expected");
      take();
      return e;
    }
    error("operand expected");
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string expr_to_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::number: return std::to_string(e->value);
    case Expr::Kind::variable: return std::string(1, e->var);
    case Expr::Kind::add: return "(" + expr_to_string(e->a) + " + " + expr_to_string(e->b) + ")";
    case Expr::Kind::sub: return "(" + expr_to_string(e->a) + " - " + expr_to_string(e->b) + ")";
    case Expr::Kind::mul: return "(" + expr_to_string(e->a) + " * " + expr_to_string(e->b) + ")";
    case Expr::Kind::div: return "(" + expr_to_string(e->a) + " / " + expr_to_string(e->b) + ")";
    case Expr::Kind::neg: return "(-" + expr_to_string(e->a) + ")";
    case Expr::Kind::pow: return expr_to_string(e->a) + "^" + std::to_string(e->exponent);
    case Expr::Kind::catalan: return "c(" + expr_to_string(e->a) + ")";
  }
  return "?";
}

MultiSeries expand(const ExprPtr& e, Orders o) {
  switch (e->kind) {
    case Expr::Kind::number: return MultiSeries::constant(e->value, o);
    case Expr::Kind::variable: return MultiSeries::variable(e->var, o);
    case Expr::Kind::add: return expand(e->a, o) + expand(e->b, o);
    case Expr::Kind::sub: return expand(e->a, o) - expand(e->b, o);
    case Expr::Kind::mul: return expand(e->a, o) * expand(e->b, o);
    case Expr::Kind::div: return expand(e->a, o) / expand(e->b, o);
    case Expr::Kind::neg: return -expand(e->a, o);
    case Expr::Kind::pow: return expand(e->a, o).pow(e->exponent);
    case Expr::Kind::catalan: return MultiSeries::catalan_of(expand(e->a, o));
  }
  return MultiSeries(o);
}

MultiSeries expand_rational(std::string_view text, Orders o) { return expand(parse_expr(text), o); }

}  // namespace permutoria
