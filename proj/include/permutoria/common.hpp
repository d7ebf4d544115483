#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permutoria {

enum class Errc : int {
  ok = 0,
  invalid_argument,
  parse_error,
  limit_exceeded,
  zero_object,
  overflow,
  non_unit_divisor,
  invalid_walk,
  not_inner_corner,
  not_a_tableau,
  not_dominant,
  not_partition_shaped,
  shape_mismatch,
  not_lr,
  canonical_assert_failed,
  not_in_domain,
  not_avoider,
  not_alternating,
  too_many_columns,
  not_yamanouchi,
  no_placement,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

// Size caps. Defaults can be overridden through PERMUTORIA_LIMITS, a comma
// separated list such as "size=12,tree=10,box=5".
struct Limits {
  int size = 11;    // full enumeration of S_n / DA_n
  int da_size = 14; // DA counting uses much stronger pruning
  int tree = 12;    // generating tree depth
  int box = 5;      // tableau bounding box side
  int letters = 6;

  static const Limits& get();
  static Limits from_string(const std::string& spec);
};

void check_limit(int value, int cap, const char* what);

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace permutoria
