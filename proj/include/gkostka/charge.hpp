#pragma once

// Two-rectangle statistics, orbit-averaged charge and cocharge on LR words, classical charge.

#include "gkostka/lrwords.hpp"

namespace gkostka {

/// Cells of the shape of P(w) strictly east of column max(mu1, mu2); w in W((r1, r2)).
[[nodiscard]] int d_pair(const Word& w, Rectangle r1, Rectangle r2);
/// Cells of the shape of P(w) strictly below row max(eta1, eta2).
[[nodiscard]] int dtilde_pair(const Word& w, Rectangle r1, Rectangle r2);

struct ChargePair {
  int charge = 0;
  int cocharge = 0;
};

/// Both gradings at once: (1/t!) sum over S_t of sum_i (t-i) d_{i} (resp. d~_i) on the orbit.
[[nodiscard]] ChargePair charge_pair(const Word& w, const RectSeq& r);
[[nodiscard]] int charge_R(const Word& w, const RectSeq& r);
[[nodiscard]] int cocharge_R(const Word& w, const RectSeq& r);
[[nodiscard]] int charge_R(const Tableau& t, const RectSeq& r);
[[nodiscard]] int cocharge_R(const Tableau& t, const RectSeq& r);

/// Lascoux-Schutzenberger charge of a word of partition content.
[[nodiscard]] int ls_charge(const Word& w);
[[nodiscard]] int ls_cocharge(const Word& w);

/// n(R) = sum over cells of binom(r_ij, 2), r_ij = number of rectangles containing (i, j).
[[nodiscard]] int n_stat(const RectSeq& r);

}  // namespace gkostka
