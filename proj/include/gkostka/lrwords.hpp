#pragma once

// Sequences of rectangles, LR words and LR tableaux, and the pseudo-order on sequences.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkostka/core.hpp"

namespace gkostka {

/// Rectangular partition with `rows` rows of length `cols`. rows == 0 is the empty rectangle,
/// which only appears transiently while splitting a row off a rectangle.
struct Rectangle {
  int rows = 1;
  int cols = 1;

  [[nodiscard]] int cells() const noexcept { return rows * cols; }
  [[nodiscard]] Rectangle transposed() const noexcept { return {cols, rows}; }
  [[nodiscard]] Partition partition() const { return Partition(std::vector<int>(rows, cols)); }
  auto operator<=>(const Rectangle&) const = default;
};

/// |R1 ∩ R2| for rectangles aligned at the origin.
[[nodiscard]] inline int intersection_size(Rectangle a, Rectangle b) noexcept {
  return std::min(a.rows, b.rows) * std::min(a.cols, b.cols);
}

using XiStat = std::vector<Partition>;  // xi[k-1] = partition of heights of the width-k rectangles

class RectSeq {
 public:
  RectSeq() = default;
  explicit RectSeq(std::vector<Rectangle> rects);

  [[nodiscard]] const std::vector<Rectangle>& rects() const noexcept { return rects_; }
  [[nodiscard]] int count() const noexcept { return static_cast<int>(rects_.size()); }
  [[nodiscard]] const Rectangle& operator[](std::size_t i) const { return rects_[i]; }
  [[nodiscard]] bool empty() const noexcept { return rects_.empty(); }

  /// n = sum of heights.
  [[nodiscard]] int alphabet_size() const noexcept;
  [[nodiscard]] int total_cells() const noexcept;
  /// Subalphabet of the i-th rectangle (0-based index).
  [[nodiscard]] Interval subalphabet(std::size_t i) const;
  /// Index of the rectangle whose subalphabet holds letter x.
  [[nodiscard]] int block_of(Letter x) const;
  [[nodiscard]] int max_cols() const noexcept;
  [[nodiscard]] int max_rows() const noexcept;

  /// gamma(R) = (mu_1^{eta_1}, mu_2^{eta_2}, ...).
  [[nodiscard]] std::vector<int> gamma() const;
  [[nodiscard]] XiStat xi() const;
  [[nodiscard]] RectSeq rows_seq() const;
  [[nodiscard]] RectSeq transposed() const;
  /// Sorted by width descending, then height descending.
  [[nodiscard]] RectSeq dominant_form() const;
  [[nodiscard]] bool is_dominant() const noexcept;
  /// R_j ⊇ R_{j+1} for all j.
  [[nodiscard]] bool is_nested() const noexcept;
  /// Every rectangle is a single row.
  [[nodiscard]] bool is_rows() const noexcept;

  /// Key tableau Y_i of the i-th rectangle in its subalphabet.
  [[nodiscard]] Tableau key(std::size_t i) const;

  auto operator<=>(const RectSeq&) const = default;

 private:
  std::vector<Rectangle> rects_;
};

/// Text format: comma-separated `ηxμ` items (rows x cols), e.g. "2x3,2x3,3x2".
[[nodiscard]] RectSeq parse_rectseq(std::string_view text);
[[nodiscard]] std::string to_string(const RectSeq& r);

struct SeqInvariants {
  std::vector<int> gamma;
  XiStat xi;
  RectSeq rows;
  RectSeq transpose;
  int n_alphabet = 0;
};

[[nodiscard]] SeqInvariants seq_invariants(const RectSeq& r);

/// Rectangle with m rows and k columns, row i filled with the i-th letter of a.
[[nodiscard]] Tableau key_rect(int k, int m, Interval a);

/// P(w|A_i) = Y_i for every i.
[[nodiscard]] bool is_lr_word(const Word& w, const RectSeq& r);
[[nodiscard]] bool is_lr_tableau(const Tableau& t, const RectSeq& r);

/// Column-strict tableaux of the given shape and content (zeros allowed), lexicographic by rows.
[[nodiscard]] std::vector<Tableau> enumerate_cst(const Partition& shape, const std::vector<int>& content);
/// Column-strict tableaux of partition shape and the given content, over all shapes.
[[nodiscard]] std::vector<Tableau> enumerate_cst_all(const std::vector<int>& content);

/// LRT(shape; R), lexicographic by rows.
[[nodiscard]] std::vector<Tableau> enumerate_lrt(const Partition& shape, const RectSeq& r);
/// LRT(R) over all shapes: shapes in reverse lexicographic order, then rows lexicographically.
[[nodiscard]] std::vector<Tableau> enumerate_lrt_all(const RectSeq& r);

/// R ⊵ S: for every width k the heights partition of R dominates that of S.
[[nodiscard]] bool pseudo_geq(const RectSeq& r, const RectSeq& s);

/// One generating relation of the pseudo-order.
struct ElementaryStep {
  enum class Kind { E1, E2 };
  Kind kind = Kind::E2;
  int position = 0;  // E2: 0-based index p of the swapped pair; E1: always 0
  int k = 0;         // E1: common width
  int a = 0;         // E1: height of the first rectangle (becomes a-1)
  int b = 0;         // E1: height of the second rectangle (becomes b+1); b == 0 inserts a new one-row rectangle
  auto operator<=>(const ElementaryStep&) const = default;
};

[[nodiscard]] std::string to_string(const ElementaryStep& s);

/// Sequence obtained from r by one step.
[[nodiscard]] RectSeq apply_step(const RectSeq& r, const ElementaryStep& step);

enum class ChainStrategy {
  Canonical,  // sort to dominant form, widest class first, first admissible transfer
  AtFront,    // narrowest class first, last admissible transfer, no initial sort
};

/// Chain of elementary steps leading from r to s. Throws InvalidInput if not pseudo_geq(r, s).
[[nodiscard]] std::vector<ElementaryStep> chain_between(const RectSeq& r, const RectSeq& s,
                                                        ChainStrategy strategy = ChainStrategy::Canonical);

}  // namespace gkostka
