#pragma once

#include <string>
#include <vector>

#include "permutoria/gengraph.hpp"

namespace permutoria {

// A displayed generating function Ext(x, y, z) together with the pattern
// sets it is claimed for. Some displays come in two equivalent forms.
struct FormulaEntry {
  std::string id;
  std::vector<std::string> pattern_sets;
  std::vector<std::string> forms;
};

const std::vector<FormulaEntry>& formula_registry();
const FormulaEntry& find_formula(const std::string& id);

struct GraphClaim {
  std::string id;
  std::string a, b;
};
const std::vector<GraphClaim>& graph_equivalence_claims();

struct SymmetryClaim {
  std::string id;
  std::string patterns;
};
const std::vector<SymmetryClaim>& symmetry_claims();

// Audit cells: d + c + r <= max_total with d <= max_total and c, r <= side.
struct AuditBounds {
  int max_total = 8;
  int side = 6;
};

struct FormulaCheck {
  std::string id;
  std::string patterns;
  int form = 0;
  Discrepancy result;
};

std::vector<FormulaCheck> audit_formula(const FormulaEntry& e, AuditBounds b = {});

}  // namespace permutoria
