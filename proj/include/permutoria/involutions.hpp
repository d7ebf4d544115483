#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "permutoria/tableau.hpp"

namespace permutoria {

struct TableauPair {
  SkewTableau P;
  SkewTableau Q;
};

// Jeu de taquin. The slide starts at an inner corner (r, c), 0-based.
SkewTableau jdt_slide(const SkewTableau& t, int r, int c);
std::vector<std::pair<int, int>> inner_corners(const SkewTableau& t);
SkewTableau jdt(const SkewTableau& t);
// Random corner order; used to test confluence.
SkewTableau jdt_random(const SkewTableau& t, std::mt19937_64& rng);

// Bender-Knuth generators. A word lists generator indices as written in a
// product; the rightmost one acts first.
using BKWord = std::vector<int>;
SkewTableau bender_knuth(const SkewTableau& t, int i);
SkewTableau apply_bk_word(const SkewTableau& t, const BKWord& w);
BKWord bk_z(int m);
BKWord bk_t(int k, int l, int d = 0);
BKWord bk_concat(std::initializer_list<BKWord> parts);  // product of words, left to right
std::string bk_word_str(const BKWord& w);

// Tableau switching X(S, T) = (T', S'): S inside, T outside.
std::pair<SkewTableau, SkewTableau> tableau_switch(const SkewTableau& s, const SkewTableau& t);
// The same map computed by outward slides of the cells of S.
std::pair<SkewTableau, SkewTableau> tableau_switch_slides(const SkewTableau& s, const SkewTableau& t);

// Schuetzenberger involution on partition-shaped tableaux (as z_m), and the
// evacuation procedure kept as an independent route.
SkewTableau schuetzenberger(const SkewTableau& t);
SkewTableau evacuation(const SkewTableau& t);

using IntMatrix = std::vector<std::vector<std::int64_t>>;
TableauPair rsk_matrix(const IntMatrix& m);
IntMatrix rsk_matrix_inverse(const SkewTableau& p, const SkewTableau& q);
IntMatrix to_int_matrix(const Matrix& m);

// rsk(T) = (jdt(T), jdt(tau(T))).
TableauPair rsk_tableau(const SkewTableau& t);
// Inverse through switching: X(P, rho(tau(Q))) = (can, T). P carries the
// companion of the result, Q carries its shape.
SkewTableau rsk_tableau_inverse(const SkewTableau& p, const SkewTableau& q);

// Reversal, chi^{can(mu)} by default or with a chosen partition-shaped S.
SkewTableau reversal(const SkewTableau& t);
SkewTableau reversal_with(const SkewTableau& s, const SkewTableau& t);

// T flagged as LR (or anti-LR) with companion nu/0 (or its rotation) in a
// companion box equal to the shape box; nullopt when T does not qualify.
std::optional<SkewTableau> orient(const SkewTableau& t, Orientation o);

// Fundamental symmetry map and its dual; the branch follows the orientation flag.
SkewTableau rho(const SkewTableau& t);
SkewTableau rho_dual(const SkewTableau& t);

// Omega through three switchings, and through its Bender-Knuth word on the
// filled rectangle.
SkewTableau omega(const SkewTableau& t);
SkewTableau omega_bk(const SkewTableau& t);

bool jdt_equivalent(const SkewTableau& a, const SkewTableau& b);
bool dual_equivalent(const SkewTableau& a, const SkewTableau& b);  // ShapeMismatch on different shapes

struct DiagramReport {
  bool ok = true;
  std::vector<std::string> failures;
};
DiagramReport verify_diagram(const SkewTableau& t);

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// s_mu s_nu = sum c^lambda_{mu nu} s_lambda in n variables, coefficient by coefficient.
bool schur_product_check(const Partition& mu, const Partition& nu, int n);

}  // namespace permutoria
