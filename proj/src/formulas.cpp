#include "permutoria/formulas.hpp"

#include <map>

namespace permutoria {

const std::vector<FormulaEntry>& formula_registry() {
  static const std::vector<FormulaEntry> reg = {
      {"4.1", {"123", "213"}, {"1/((1-y)(1-z)-x) (1 + x^2 c(x)/((1-y-x c(x))(1-z-x c(x))))"}},
      {"4.2",
       {"132", "312"},
       {"(1-x c(x))/((1-y-x c(x))(1-z-x c(x)))", "c(x)/((1-y c(x))(1-z c(x)))"}},
      {"4.3",
       {"231", "321"},
       {"(1-x c(x))/((1-y-x c(x))(1-z-x c(x)))", "c(x)/((1-y c(x))(1-z c(x)))"}},
      {"5.1",
       {"123,231", "123,312"},
       {"1/(1-y) 1/(1-z) (1/(1-x) + x/(1-x)^2 (z/(1-z) + y/(1-y)) + x^2/(1-x)^3)"}},
      {"5.2", {"123,132,231", "123,132,312", "213,231,312"}, {"1/(1-x)^2 1/(1-y) 1/(1-z) - x/(1-x)"}},
      {"5.4",
       {"123,132,231,312", "132,213,231,312"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + x/(1-x) (1/(1-y) + 1/(1-z) - 1) - x"}},
      {"6.1",
       {"213,1423", "213,4123", "123,2413"},
       {"1/((1-y)(1-z)) (1 + x(1-x)/((1-x-y)(1-3x+x^2)) (1/(1-z) - x))"}},
      {"6.5",
       {"321,2413", "312,1432", "312,2431", "231,4213"},
       {"1/(1-z) + (1-x)^2/((1-x-z)(1-3x+x^2)) (x/(1-z) + y/(1-y)) + y^2/(1-y)^2 x/(1-3x+x^2)"}},
      {"6.6",
       {"312,2314", "312,3214"},
       {"1/((1-z)(1-3x+x^2)(1-2x-y+x y)) (1 - 5x + 6x^2 + x(1-2x)/(1-z))"}},
      {"6.7",
       {"231,4123"},
       {"1/(1-4x+5x^2-3x^3) (x^3 + x^2(y^2(1-3x)+3x y-x)/(1-y)^3 + x^2(z^2(1-3x)+3x z-x)/(1-z)^3"
        " + 1/((1-y)(1-z)) (1-5x+5x^2+x(1-x)(1/(1-y) + 1/(1-z))))"}},
      {"6.8",
       {"213,1234", "123,3214"},
       {"1/((1-y)(1-z)) + x/((1-y)^2(1-z)^2(1-3x+x^2)) (1 - 2x + x(1-x y z)/((1-y)(1-z)))"}},
      {"6.9",
       {"312,4321", "321,4123"},
       {"1/(1-z) + 1/(1-3x+x^2) (y^2 (1/(1-y) + 1/(1-z) - 1) + y(1-2x)/(1-z) + x(1-2x+y)/(1-z)^2"
        " + x^2/(1-z)^3)"}},
      {"6.10",
       {"231,1234"},
       {"1/((1-x)^3(1-y)(1-z)) (x^2 (1/(1-y)^2 + 1/((1-y)(1-z)) + 1/(1-z)^2)"
        " + (1-5x+9x^2-8x^3+5x^4)/(1-x)^2 + x(1-4x+5x^2)/(1-x) (1/(1-y) + 1/(1-z) - 1))"}},

      {"A.1-123,132", {"123,132"}, {"1/((1-x)(1-2x)) (x y+1-x)/(1-y) (x z+1-x)/(1-z)"}},
      {"A.1-123,213", {"123,213"}, {"1/(1-y) 1/(1-z) + x/(1-2x) 1/(1-y)^2 1/(1-z)^2"}},
      {"A.1-123,312",
       {"123,312"},
       {"1/(1-y) 1/(1-z) (1/(1-x) + x/(1-x)^2 (z/(1-z) + y/(1-y)) + x^2/(1-x)^3)"}},
      {"A.1-132,213",
       {"132,213"},
       {"1/(1-x) 1/(1-y) 1/(1-z) (1 - 2x + x/(1-y) + x/(1-z) + x^2/(1-2x) 1/(1-y) 1/(1-z))"}},
      {"A.1-132,231", {"132,231"}, {"1/(1-z) (1 + (1-x)y/((1-2x)(1-x-y)) + x/(1-2x) 1/(1-z))"}},
      {"A.1-132,321",
       {"132,321"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + x^2/(1-x)^3 (1/(1-y) + 1/(1-z) - 1)"
        " + x/(1-x)^2 (y/(1-y) z/(1-z) + y/(1-y)^2 + z/(1-z)^2)"}},
      {"A.1-213,312", {"213,312"}, {"(1-x)/(1-2x) 1/(1-x-y) (1/(1-z) - x)"}},
      {"A.1-213,321",
       {"213,321"},
       {"1/(1-x) (1/(1-y) + 1/(1-z) - 1) + (1+x)/(1-x)^2 y/(1-y) z/(1-z)"
        " + x/(1-x)^2 (y/(1-y)^2 + z/(1-z)^2) + x^2/(1-x)^3 1/(1-y) 1/(1-z)"}},
      {"A.1-231,312",
       {"231,312"},
       {"1/(1-2x) (x + 1/(1-y) 1/(1-z) - x(1-2y)/(1-y)^2 - x(1-2z)/(1-z)^2)"}},
      {"A.1-312,321", {"312,321"}, {"1/(1-z) (1 + y/(1-2x)) + 1/(1-2x) (x/(1-z)^2 + y^2/(1-y))"}},

      {"A.2-123,132,213", {"123,132,213"}, {"1/(1-x-x^2) (1+x y)/(1-y) (1+x z)/(1-z)"}},
      {"A.2-123,132,312", {"123,132,312"}, {"1/(1-x)^2 1/(1-y) 1/(1-z) - x/(1-x)"}},
      {"A.2-123,213,231",
       {"123,213,231"},
       {"1/(1-x) 1/(1-y) 1/(1-z) (1/(1-x) - x(1-y) + x z/(1-z))"}},
      {"A.2-123,231,312",
       {"123,231,312"},
       {"1/(1-x)^2 1/(1-y) 1/(1-z) + x/(1-x) (y^2/(1-y)^2 + z^2/(1-z)^2 - 1)"}},
      {"A.2-132,213,231",
       {"132,213,231"},
       {"1/(1-x)^2 1/(1-y) 1/(1-z) + x/(1-x) (z/(1-z)^2 - 1/(1-z))"}},
      {"A.2-132,231,312",
       {"132,231,312"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + x^2/(1-x)^2 (1/(1-y) + 1/(1-z) - 1) + x/(1-x) (y/(1-y)^2 + z/(1-z)^2)"}},
      {"A.2-132,231,321",
       {"132,231,321"},
       {"1/(1-x) (1/(1-x) (1/(1-y) + 1/(1-z) - 1) + y z/(1-y) + x y^2/(1-y)^2 - 1)"}},
      {"A.2-213,231,312", {"213,231,312"}, {"1/(1-x)^2 1/(1-y) 1/(1-z) - x/(1-x)"}},
      {"A.2-213,231,321",
       {"213,231,321"},
       {"(1+z)/(1-x)^2 1/(1-y) + 1/(1-x)^2 z^2/(1-z) - x/(1-x)"}},
      {"A.2-231,312,321",
       {"231,312,321"},
       {"1/(1-x-x^2) ((1+x)(1/(1-y) + 1/(1-x) - 1) + y z - x)"}},

      {"A.3-123,132,213,312",
       {"123,132,213,312"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + 1/(1-y) x/(1-x) (1+z) - x"}},
      {"A.3-123,132,231,312",
       {"123,132,231,312"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + x/(1-x) (1/(1-y) + 1/(1-z) - 1) - x"}},
      {"A.3-123,213,231,312", {"123,213,231,312"}, {"(1+x)/(1-x) 1/(1-y) 1/(1-z) - x"}},
      {"A.3-132,213,231,312",
       {"132,213,231,312"},
       {"1/(1-x) 1/(1-y) 1/(1-z) + x/(1-x) (1/(1-y) + 1/(1-z) - 1) - x"}},
      {"A.3-132,213,231,321",
       {"132,213,231,321"},
       {"(1+x)/(1-x) (1/(1-y) + 1/(1-z) - 1) + z/(1-x) y/(1-y) - x"}},
      {"A.3-132,231,312,321", {"132,231,312,321"}, {"(1+x)/(1-x) (1/(1-y) + 1/(1-z) - 1) + y z - x"}},
      {"A.3-213,231,312,321",
       {"213,231,312,321"},
       {"1/(1-x) (-1 + 1/(1-y) + 1/(1-z) + (x+y)(x+z))"}},

      {"A.4-123,132,213,231,312", {"123,132,213,231,312"}, {"1/(1-x) 1/(1-y) 1/(1-z) + x(x+y+z)"}},
      {"A.4-132,213,231,312,321",
       {"132,213,231,312,321"},
       {"1/(1-x) (1/(1-y) + 1/(1-z) - 1) + (x+y)(x+z)"}},
  };
  return reg;
}

const FormulaEntry& find_formula(const std::string& id) {
  for (const auto& e : formula_registry())
    if (e.id == id) return e;
  fail(Errc::invalid_argument, "unknown formula '" + id + "'");
}

const std::vector<GraphClaim>& graph_equivalence_claims() {
  static const std::vector<GraphClaim> claims = {
      {"4.1", "123", "213"},
      {"4.2", "132", "312"},
      {"4.3", "231", "321"},
      {"5.3", "123,231,312", "132,213,321"},
      {"6.2", "321,2413", "231,4213"},
      {"6.3", "321,3142", "231,4132"},
      {"6.8", "213,1234", "123,3214"},
  };
  return claims;
}

const std::vector<SymmetryClaim>& symmetry_claims() {
  static const std::vector<SymmetryClaim> claims = {
      {"4.3", "231"},         {"5.1", "123,231"},  {"5.1", "123,312"},
      {"5.2", "123,132,231"}, {"6.7", "231,4123"}, {"6.10", "231,1234"},
  };
  return claims;
}

std::vector<FormulaCheck> audit_formula(const FormulaEntry& e, AuditBounds b) {
  const Orders o{b.max_total, b.side, b.side};
  std::vector<FormulaCheck> out;
  for (const std::string& ps : e.pattern_sets) {
    const PatternSet ts = parse_pattern_set(ps);
    const MultiSeries brute = brute_series(ts, ParentRule::standard_extended, o, b.max_total);
    for (std::size_t f = 0; f < e.forms.size(); ++f) {
      const MultiSeries formula = expand_rational(e.forms[f], o);
      out.push_back({e.id, ps, static_cast<int>(f), compare_series(brute, formula, b.max_total)});
    }
  }
  return out;
}

}  // namespace permutoria
