#pragma once

// Slicing operators, row and column catabolism, and the catabolism multi-type.

#include <string>
#include <vector>

#include "gkostka/lrwords.hpp"

namespace gkostka {

enum class SliceMode { Row, Col };

/// Row mode: H_r(S) = P(word(S_n) word(S_s)), S_n = rows 1..r. Column mode:
/// V_c(S) = P(word(S_e) word(S_w)), S_w = columns 1..c.
[[nodiscard]] Tableau slice(const Tableau& s, SliceMode mode, int at);

/// S - Y_1 as a skew tableau of shape lambda / (mu1^eta1). Throws unless the restriction of S to
/// [base+1, base+eta1] is the key of r1 there.
[[nodiscard]] Tableau remove_key(const Tableau& s, Rectangle r1, Letter base = 0);

/// cat (row mode) or colcat (column mode) for the first rectangle r1 on letters above base.
[[nodiscard]] Tableau cat_step(const Tableau& s, Rectangle r1, SliceMode mode, Letter base = 0);

struct CatStep {
  std::string op;  // e.g. "colcat 2x3"
  Tableau tableau;
};

struct CatTrace {
  std::vector<CatStep> steps;
  bool verdict = false;
};

[[nodiscard]] CatTrace catabolize(const Tableau& s, const RectSeq& r, SliceMode mode);
[[nodiscard]] inline bool is_catabolizable(const Tableau& s, const RectSeq& r, SliceMode mode) {
  return catabolize(s, r, mode).verdict;
}

/// Largest j with S|_{[base+1, base+j]} equal to the key of (k^j) on those letters.
[[nodiscard]] int y_k(const Tableau& s, int k, Letter base = 0);

struct CTypeStat {
  XiStat xi;                   // xi[k-1] = xi^k(S)
  std::vector<Tableau> stable;  // stable V_k iterate for each width visited, widest first
};

/// Catabolism multi-type of a tableau whose content is a partition.
[[nodiscard]] CTypeStat ctype(const Tableau& s);

/// Componentwise dominance ctype(S) >= xi(R). Throws if content(S) != gamma(R).
[[nodiscard]] bool ctype_dominates(const Tableau& s, const RectSeq& r);

/// "(); (3); (2,2)"
[[nodiscard]] std::string to_string(const XiStat& xi);

/// Drops trailing empty partitions so that equal multi-types compare equal.
[[nodiscard]] XiStat trimmed(XiStat xi);

}  // namespace gkostka
