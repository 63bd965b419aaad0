#pragma once

// Schensted insertion, the RSK bijection, jeu-de-taquin operators on standard tableaux and
// the crystal reflections that give the symmetric group action on words.

#include <utility>

#include "gkostka/core.hpp"

namespace gkostka {

struct RSKPair {
  Tableau p;  // column-strict, straight shape
  Tableau q;  // standard, same shape
  auto operator<=>(const RSKPair&) const = default;
};

/// Row-inserts x into a straight tableau. Returns the new tableau and the new cell.
[[nodiscard]] std::pair<Tableau, Cell> row_insert(const Tableau& t, Letter x);

/// Column-inserts x into a straight tableau: the result is P(x . word(t)).
[[nodiscard]] std::pair<Tableau, Cell> column_insert(const Tableau& t, Letter x);

/// Inverse of row insertion starting at a corner cell: returns (tableau, ejected letter).
[[nodiscard]] std::pair<Tableau, Letter> reverse_row_insert(const Tableau& t, Cell corner);

/// Inverse of column insertion starting at a corner cell: returns (ejected letter, tableau).
[[nodiscard]] std::pair<Letter, Tableau> reverse_column_insert(const Tableau& t, Cell corner);

/// Outer corners of a straight shape, listed north-east to south-west.
[[nodiscard]] std::vector<Cell> corners(const Partition& shape);

[[nodiscard]] Tableau insertion_tableau(const Word& w);
[[nodiscard]] RSKPair rsk(const Word& w);
/// Throws InvalidInput when the pair does not have matching shapes or q is not standard.
[[nodiscard]] Word inverse_rsk(const RSKPair& pair);
[[nodiscard]] Word inverse_rsk(const Tableau& p, const Tableau& q);

/// Rectification of a (skew) tableau.
[[nodiscard]] inline Tableau rectify(const Tableau& t) { return insertion_tableau(row_word(t)); }

[[nodiscard]] bool knuth_equivalent(const Word& v, const Word& w);

/// Schützenberger involution on standard tableaux.
[[nodiscard]] Tableau evacuation(const Tableau& q);
/// Promotion: delete N, slide the hole to the corner (1,1), increment, put 1 there.
/// With this direction Q(chi_R(w)) = promotion(Q(w)) for single-rectangle R.
[[nodiscard]] Tableau promotion(const Tableau& q);
[[nodiscard]] Tableau promotion_inverse(const Tableau& q);

/// Reverse of a word.
[[nodiscard]] Word reversed(const Word& w);
/// Reverse-complement x -> (n + 1 - x) read backwards.
[[nodiscard]] Word reverse_complement(const Word& w, int n);

/// The crystal reflection s_r: in the subword of r and r+1, an r+1 is bracketed with the
/// nearest unbracketed r to its right; the unbracketed subword r^a (r+1)^b becomes r^b (r+1)^a.
[[nodiscard]] Word crystal_reflection(const Word& w, Letter r);

/// Action of the longest permutation of the interval b, via the reduced word
/// s_1 (s_2 s_1) (s_3 s_2 s_1) ... shifted into b. Letters outside b are untouched.
[[nodiscard]] Word w0_action(const Word& w, Interval b);

/// Symmetric group action: perm is given in one-line notation on [1, n] (perm[x-1] = image of x).
/// Realized by crystal reflections along a reduced word of perm.
[[nodiscard]] Word permutation_action(const Word& w, const std::vector<int>& perm);

/// Highest weight for every pair (r, r+1) inside b with letters of b reading right to left.
[[nodiscard]] bool is_lattice(const Word& w, Interval b);

}  // namespace gkostka
