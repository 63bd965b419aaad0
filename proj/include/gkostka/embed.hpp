#pragma once

// Rectangle switching tau_p, the elementary embeddings iota, composite embeddings theta
// between comparable rectangle sequences, image tests and multi-atoms.

#include <optional>
#include <vector>

#include "gkostka/lrwords.hpp"

namespace gkostka {

/// The LR tableau of the given shape for the pair (r1, r2) over letters [1, r1.rows + r2.rows],
/// if there is one. Two-rectangle products are multiplicity-free, so it is unique. Cached.
[[nodiscard]] const std::optional<Tableau>& two_rect_lrt(const Partition& shape, Rectangle r1, Rectangle r2);

/// Replaces P(w|_b) by `p` (written over [1, |b|]) while keeping Q(w|_b) and the positions of b.
[[nodiscard]] Word replace_block(const Word& w, Interval b, const Tableau& p);

/// Letters of w lying in b, shifted down to start at 1.
[[nodiscard]] Word local_word(const Word& w, Interval b);

/// tau_p on W(R), p is 0-based (swaps rectangles p and p+1). Result lies in W(tau_p R).
[[nodiscard]] Word tau_p(const Word& w, const RectSeq& r, int p);
[[nodiscard]] Tableau tau_p(const Tableau& t, const RectSeq& r, int p);
[[nodiscard]] RectSeq swapped(const RectSeq& r, int p);

struct OrbitElement {
  RectSeq seq;
  Word word;
};

/// Orbit of (R, w) under rectangle permutations, one element per distinct arrangement,
/// (R, w) first. Throws InvalidInput when there are more than max_size arrangements.
[[nodiscard]] std::vector<OrbitElement> orbit(const Word& w, const RectSeq& r, std::size_t max_size = 720);

/// iota_{k,eta1,eta2}: LRT(shape; (k^eta1),(k^eta2)) -> LRT(shape; (k^{eta1-1}),(k^{eta2+1})).
[[nodiscard]] Tableau iota(const Tableau& t, int k, int eta1, int eta2);

/// One elementary embedding applied to w in W(r).
[[nodiscard]] Word embed_step(const Word& w, const RectSeq& r, const ElementaryStep& step);

[[nodiscard]] Word theta(const Word& w, const RectSeq& r, const RectSeq& s,
                         ChainStrategy strategy = ChainStrategy::Canonical);
[[nodiscard]] Tableau theta(const Tableau& t, const RectSeq& r, const RectSeq& s,
                            ChainStrategy strategy = ChainStrategy::Canonical);
/// Along an explicit chain.
[[nodiscard]] Word theta_along(const Word& w, const RectSeq& r, const std::vector<ElementaryStep>& chain);

/// theta_R: LRT(R) -> CST(gamma(R)), the embedding into rows(R).
[[nodiscard]] Tableau theta_rows(const Tableau& t, const RectSeq& r);
/// Im theta_R, sorted.
[[nodiscard]] std::vector<Tableau> theta_image(const RectSeq& r);

/// Membership of s in Im theta_R tested one width class at a time via the catabolism multi-type.
[[nodiscard]] bool theta_image_contains(const Tableau& s, const RectSeq& r);

/// Every rectangle sequence R' with gamma(R') = gamma.
[[nodiscard]] std::vector<RectSeq> sequences_with_gamma(const std::vector<int>& gamma);
/// Dominant sequences with gamma(R) = gamma (gamma a partition), one per pseudo-equivalence class.
[[nodiscard]] std::vector<RectSeq> dominant_sequences_with_gamma(const Partition& gamma);

/// matom(R) = Im theta_R minus the images of all strictly larger R' with gamma(R') = gamma(R).
[[nodiscard]] std::vector<Tableau> matom(const RectSeq& r, int max_cells = 12);

}  // namespace gkostka
