#include <set>

#include "doctest.h"
#include "gkostka/catabolism.hpp"
#include "gkostka/charge.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"
#include "gkostka/transpose.hpp"
#include "gkostka/verify.hpp"

using namespace gkostka;

namespace {
const Tableau kIotaT({{1, 1, 1, 5, 5}, {2, 2, 2, 6}, {3, 3, 3}, {4, 4, 4}, {5, 6}, {6}});
const Tableau kIotaT2({{1, 1, 1, 4, 4}, {2, 2, 2, 5}, {3, 3, 3}, {4, 5, 6}, {5, 6}, {6}});
}  // namespace

TEST_CASE("iota on the two-rectangle example") {
  CHECK(iota(kIotaT, 3, 4, 2) == kIotaT2);
  const RectSeq r = parse_rectseq("4x3,2x3"), s = parse_rectseq("3x3,3x3");
  CHECK(theta(kIotaT, r, s) == kIotaT2);
  CHECK(charge_R(kIotaT2, s) == charge_R(kIotaT, r));
  // stacked keys go to stacked keys
  const Tableau stack({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {5, 5, 5}, {6, 6, 6}});
  CHECK(iota(stack, 3, 4, 2) == stack);
  CHECK_THROWS_AS((void)iota(kIotaT, 3, 3, 2), InvalidInput);
}

TEST_CASE("two-rectangle LR tableaux are unique per shape") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int k = 1; k <= 3; ++k) {
        const RectSeq r({{a, k}, {b, k}});
        std::set<Partition> shapes;
        for (const auto& t : enumerate_lrt_all(r)) CHECK(shapes.insert(t.shape()).second);
      }
}

TEST_CASE("tau_p") {
  const RectSeq r = parse_rectseq("1x2,2x1,1x1");
  for (const Word& w : enumerate_lr_words(r))
    for (int p = 0; p < 2; ++p) {
      const Word v = tau_p(w, r, p);
      CHECK(is_lr_word(v, swapped(r, p)));
      CHECK(rsk(v).q == rsk(w).q);
      CHECK(tau_p(v, swapped(r, p), p) == w);
    }
  // equal neighbours: the swap is the identity
  const RectSeq e = parse_rectseq("1x2,1x2");
  for (const Word& w : enumerate_lr_words(e)) CHECK(tau_p(w, e, 0) == w);
}

TEST_CASE("orbit") {
  const RectSeq r = parse_rectseq("1x2,2x1,1x1");
  const Word w = row_word(enumerate_lrt_all(r).front());
  const auto orb = orbit(w, r);
  CHECK(orb.size() == 6);
  CHECK(orb.front().seq == r);
  CHECK(orbit(w, r, 6).size() == 6);
  CHECK_THROWS_AS((void)orbit(w, r, 5), InvalidInput);
}

TEST_CASE("theta") {
  const RectSeq r = parse_rectseq("2x1,1x2");
  for (const auto& t : enumerate_lrt_all(r)) CHECK(theta(t, r, r) == t);
  // theta into rows lands in column-strict tableaux of content gamma and is injective
  for (const auto& seq : all_sequences(6, 3)) {
    const auto img = theta_image(seq);
    CHECK(std::set<Tableau>(img.begin(), img.end()).size() == img.size());
    for (const auto& s : img) {
      CHECK(s.content(seq.alphabet_size()) == seq.gamma());
      CHECK(theta_image_contains(s, seq));
    }
  }
}

TEST_CASE("multi-atoms") {
  // rows(gamma) is the minimum: its atom is whatever no larger class reaches
  const RectSeq rows = parse_rectseq("1x2,1x1,1x1");
  const auto cst = enumerate_cst_all(rows.gamma());
  std::set<Tableau> higher;
  for (const auto& r : dominant_sequences_with_gamma(Partition{2, 1, 1}))
    if (r != rows)
      for (const auto& s : theta_image(r)) higher.insert(s);
  std::set<Tableau> expect;
  for (const auto& s : cst)
    if (!higher.count(s)) expect.insert(s);
  const auto atom = matom(rows);
  CHECK(std::set<Tableau>(atom.begin(), atom.end()) == expect);
  CHECK(atom.size() == expect.size());
  // for nested sequences the atom is the ctype fibre
  const RectSeq nested = parse_rectseq("2x2,1x1");
  for (const auto& s : matom(nested)) CHECK(trimmed(ctype(s).xi) == trimmed(nested.xi()));
  CHECK_THROWS_AS((void)matom(parse_rectseq("3x3"), 8), InvalidInput);
  CHECK(sequences_with_gamma({2, 2}).size() == 2);
}
