#include "permutoria/common.hpp"

#include <cstdlib>
#include <sstream>

namespace permutoria {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::ok: return "Ok";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::zero_object: return "ZeroObject";
    case Errc::overflow: return "Overflow";
    case Errc::non_unit_divisor: return "NonUnitDivisor";
    case Errc::invalid_walk: return "InvalidWalk";
    case Errc::not_inner_corner: return "NotInnerCorner";
    case Errc::not_a_tableau: return "NotATableau";
    case Errc::not_dominant: return "NotDominant";
    case Errc::not_partition_shaped: return "NotPartitionShaped";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_lr: return "NotLR";
    case Errc::canonical_assert_failed: return "CanonicalAssertFailed";
    case Errc::not_in_domain: return "NotInDomain";
    case Errc::not_avoider: return "NotAvoider";
    case Errc::not_alternating: return "NotAlternating";
    case Errc::too_many_columns: return "TooManyColumns";
    case Errc::not_yamanouchi: return "NotYamanouchi";
    case Errc::no_placement: return "NoPlacement";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

Limits Limits::from_string(const std::string& spec) {
  Limits l;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(Errc::parse_error, "bad limit entry '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad limit value in '" + item + "'");
    }
    if (key == "size") l.size = value;
    else if (key == "da") l.da_size = value;
    else if (key == "tree") l.tree = value;
    else if (key == "box") l.box = value;
    else if (key == "letters") l.letters = value;
    else fail(Errc::parse_error, "unknown limit '" + key + "'");
  }
  return l;
}

const Limits& Limits::get() {
  static const Limits limits = [] {
    const char* env = std::getenv("PERMUTORIA_LIMITS");
    return env ? from_string(env) : Limits{};
  }();
  return limits;
}

void check_limit(int value, int cap, const char* what) {
  if (value > cap) {
    fail(Errc::limit_exceeded, std::string(what) + " " + std::to_string(value) +
                                   " exceeds limit " + std::to_string(cap));
  }
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace permutoria
