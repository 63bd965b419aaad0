#pragma once

// The transpose bijection tr_R and generalized standardization.

#include <string>
#include <vector>

#include "gkostka/lrwords.hpp"
#include "gkostka/report.hpp"

namespace gkostka {

/// c-th copy (from the left) of a letter of A_i becomes the c-th letter of A_i^t; then reverse.
[[nodiscard]] Word tr_word(const Word& w, const RectSeq& r);
/// Tableau of transposed shape whose column word is tr_word(row word of t).
[[nodiscard]] Tableau tr_tab(const Tableau& t, const RectSeq& r);

/// Alphabet split into consecutive blocks, with a tableau anchored in each block.
struct AnchorTableaux {
  std::vector<Interval> blocks;
  std::vector<Tableau> z;
};

[[nodiscard]] AnchorTableaux key_anchors(const RectSeq& r);
/// Rowwise (resp. columnwise) standard tableaux of shape R_i on consecutive blocks of size |R_i|.
[[nodiscard]] AnchorTableaux rowwise_anchors(const RectSeq& r);
[[nodiscard]] AnchorTableaux columnwise_anchors(const RectSeq& r);

/// The rowwise / columnwise standard tableau of a shape, letters offset by `base`.
[[nodiscard]] Tableau rowwise_tableau(const Partition& shape, Letter base = 0);
[[nodiscard]] Tableau columnwise_tableau(const Partition& shape, Letter base = 0);

/// True iff P(w|_{from.blocks[i]}) = from.z[i] for all i and w uses no other letters.
[[nodiscard]] bool in_anchor_set(const Word& w, const AnchorTableaux& a);

/// std_Y^Z: positions of block i kept, P of the block becomes z[i], Q of the block kept.
[[nodiscard]] Word std_general(const Word& w, const AnchorTableaux& from, const AnchorTableaux& to);

/// Schensted standardization (ties broken left to right).
[[nodiscard]] Word std_word(const Word& w);
[[nodiscard]] Word cstd(const Word& w, const RectSeq& r);

/// Whether the standard word v is std(w) for some w of content alpha, by the descent criterion.
[[nodiscard]] bool std_image_check(const Word& v, const std::vector<int>& alpha);


/// (T1)-(T5), chi and tau compatibility, and rev(cstd(w)) = std(tr(w)) over W(R).
[[nodiscard]] std::vector<PropertyReport> verify_trans_props(const RectSeq& r, int max_cells = 10);

/// All of W(R), in lexicographic order.
[[nodiscard]] std::vector<Word> enumerate_lr_words(const RectSeq& r);

}  // namespace gkostka
