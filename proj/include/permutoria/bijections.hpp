#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permutoria/permcore.hpp"
#include "permutoria/tableau.hpp"

namespace permutoria {

// A standard Young tableau as plain rows.
using StandardTableau = std::vector<std::vector<int>>;

bool is_standard(const StandardTableau& t);
// Entry k sits in column col[k-1] (1-based), row row[k-1].
std::vector<int> column_reading(const StandardTableau& t);
std::vector<int> row_reading(const StandardTableau& t);
// Places k at the bottom of column w[k-1]; NotYamanouchi unless the column
// heights stay weakly decreasing.
StandardTableau from_column_reading(const std::vector<int>& w);
bool is_alternating_tableau(const StandardTableau& t);

// Pairs (col_{2i-1}, col_{2i}) become 1, 2 or 3.
std::vector<int> colpair(const StandardTableau& t);
StandardTableau colpair_inv(const std::vector<int>& w);

// Row-insertion RSK on permutations; P and Q are standard.
std::pair<StandardTableau, StandardTableau> rsk_permutation(const Permutation& sigma);
Permutation rsk_permutation_inverse(const StandardTableau& p, const StandardTableau& q);

Permutation phi(const Permutation& sigma);      // S_n(1234) -> DA_2n(1234)
Permutation phi_inv(const Permutation& sigma);  // DA_2n(1234) -> S_n(1234)

// Dyck paths as strings over {U, D}.
bool is_dyck_path(std::string_view path);
std::vector<std::string> dyck_paths(int semilength);
std::string theta(const Permutation& sigma);    // DA_2n(2413) -> Dyck paths of length 2n
Permutation theta_inv(std::string_view path);

// Dots are (row, column) pairs, 1-based.
using Dot = std::pair<int, int>;

struct ActiveRegion {
  Partition lambda;                      // trimmed
  std::vector<Dot> active;               // sorted by row
  std::vector<std::pair<Dot, Dot>> pairs;  // active pairs, upper dot first
  std::vector<Dot> placement;            // dots of sigma inside lambda
  bool parity_ok = true;                 // every active dot has odd row and column
  bool placement_12_avoiding = true;
  bool placement_21_avoiding = true;
};

// tau is a permutation of {3..m}; it is given as its word, e.g. "34".
ActiveRegion active_region(const Permutation& sigma, const std::vector<int>& tau);
std::vector<int> parse_tau(std::string_view text);
Permutation pattern_12tau(const std::vector<int>& tau);
Permutation pattern_21tau(const std::vector<int>& tau);

enum class Monotone { increasing, decreasing };
// A pair of dots forms 12 (21) on the diagram when their bounding rectangle
// lies inside it.
bool placement_avoids(const Partition& diagram, const std::vector<Dot>& dots, Monotone direction);
// increasing = 21-avoiding, decreasing = 12-avoiding. NoPlacement when the
// rows and columns admit no full matching inside the diagram.
std::vector<Dot> unique_monotone_placement(const Partition& diagram, const std::vector<int>& rows,
                                           const std::vector<int>& cols, Monotone direction);
// Every avoiding placement on exactly these rows and columns; the oracle for
// the greedy construction.
std::vector<std::vector<Dot>> monotone_placements_exhaustive(const Partition& diagram, const std::vector<int>& rows,
                                                             const std::vector<int>& cols, Monotone direction);

Permutation psi(const Permutation& sigma, const std::vector<int>& tau);      // DA_n(12tau) -> DA_n(21tau)
Permutation psi_inv(const Permutation& sigma, const std::vector<int>& tau);  // DA_n(21tau) -> DA_n(12tau)

std::vector<Dot> inactive_dots(const Permutation& sigma, const std::vector<int>& tau);

}  // namespace permutoria
