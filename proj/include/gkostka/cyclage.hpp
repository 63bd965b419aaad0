#pragma once

// w_0^R, chi_R, the R-cocyclage, strong R-cocyclage and R-cyclage relations, weak covers and
// graded posets on LRT(R).

#include <string>
#include <vector>

#include "gkostka/lrwords.hpp"

namespace gkostka {

/// w_0 of every subalphabet A_j applied to w.
[[nodiscard]] Word w0R(const Word& w, const RectSeq& r);
/// chi_R(ux) = (w0R x)(w0R u). Throws ConsistencyError if the result leaves W(R).
[[nodiscard]] Word chi_R(const Word& w, const RectSeq& r);
/// chi_R^{-1}(yv) = (w0R v)(w0R y).
[[nodiscard]] Word chi_R_inverse(const Word& w, const RectSeq& r);

struct Cover {
  Tableau lower;  // S
  Cell cell;      // corner of the upper tableau where the cover starts
};

/// R-cocyclage covers S < T: s a corner strictly east of column max width, T = P(ux), S = P(chi_R(ux)).
[[nodiscard]] std::vector<Cover> cocyclage_covers(const Tableau& t, const RectSeq& r);
/// R-cyclage covers S <^R T: s a corner strictly south of row max height, T = P(xu), S = P(chi_R^{-1}(xu)).
[[nodiscard]] std::vector<Cover> cyclage_covers(const Tableau& t, const RectSeq& r);

/// Strong cocyclage test on ux: the last letter of every orbit element avoids the first subalphabet.
[[nodiscard]] bool is_strong_cover(const Word& u, Letter x, const RectSeq& r);
/// Same, for the cover of t starting at the corner `cell`.
[[nodiscard]] bool is_strong_cover(const Tableau& t, Cell cell, const RectSeq& r);

struct WeakMode {
  enum Kind { Column, Row } kind = Column;
  int at = 0;
};

/// Column mode: the cell of P(ux) / P(u) is strictly east of column `at`.
/// Row mode: the cell of P(xu) / P(u) is strictly south of row `at`.
[[nodiscard]] bool weak_cover(const Word& u, Letter x, WeakMode mode);

enum class PosetOrder { Cocyclage, Strong, Cyclage };

struct GradedPoset {
  struct Edge {
    std::size_t lower;
    std::size_t upper;
    std::string kind;
  };
  std::vector<Tableau> nodes;
  std::vector<Edge> covers;
  std::vector<int> grade;

  [[nodiscard]] std::size_t index_of(const Tableau& t) const;
};

/// Nodes LRT(R); grade charge_R (cocyclage, strong) or cocharge_R (cyclage). Every cover is checked
/// to drop the grade by exactly one.
[[nodiscard]] GradedPoset build_poset(const RectSeq& r, PosetOrder order, int max_cells = 12);

[[nodiscard]] std::string to_dot(const GradedPoset& p);
[[nodiscard]] std::string to_json(const GradedPoset& p);
[[nodiscard]] std::string to_string(PosetOrder order);

}  // namespace gkostka
