#include <set>

#include "doctest.h"
#include "gkostka/charge.hpp"
#include "gkostka/rsk.hpp"
#include "gkostka/transpose.hpp"
#include "gkostka/verify.hpp"

using namespace gkostka;

TEST_CASE("transpose example") {
  const RectSeq r = parse_rectseq("2x3,2x3,3x2");
  CHECK(r.transposed() == parse_rectseq("3x2,3x2,2x3"));
  CHECK(r.transposed().subalphabet(2) == Interval{7, 8});
  const Tableau t({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4, 5, 6}, {3, 4, 6}, {4, 7, 7}});
  const Tableau tt({{1, 1, 4, 4}, {2, 2, 5, 7}, {3, 3, 7, 8}, {5, 6}, {6, 7}, {8, 8}});
  REQUIRE(is_lr_tableau(t, r));
  CHECK(tr_tab(t, r) == tt);
  CHECK(tt.shape() == conjugate(t.shape()));
  CHECK(tr_tab(tt, r.transposed()) == t);
  CHECK(charge_R(t, r) == cocharge_R(tt, r.transposed()));
  CHECK_THROWS_AS((void)tr_word(Word{1, 2}, parse_rectseq("2x1")), InvalidInput);
}

TEST_CASE("standardization") {
  CHECK(std_word(Word{1, 1, 2}) == Word{1, 2, 3});
  CHECK(std_word(Word{2, 1, 1}) == Word{3, 1, 2});
  CHECK_FALSE(std_image_check(Word{2, 1, 3}, {2, 1}));
  CHECK_FALSE(std_image_check(Word{2, 3, 1}, {2, 1}));
  CHECK(std_image_check(Word{3, 1, 2}, {2, 1}));
  CHECK(std_image_check(Word{1, 3, 2}, {2, 1}));
  CHECK_FALSE(std_image_check(Word{1, 2}, {2, 1}));
}

TEST_CASE("anchored standardization") {
  for (const auto& r : all_sequences(6, 3)) {
    const auto key = key_anchors(r), rw = rowwise_anchors(r), cw = columnwise_anchors(r);
    for (const Word& w : enumerate_lr_words(r)) {
      CHECK(in_anchor_set(w, key));
      CHECK(std_general(w, key, key) == w);
      CHECK(std_general(w, key, rw) == std_word(w));
      CHECK(std_general(w, key, cw) == cstd(w, r));
      CHECK(std_general(std_general(w, key, cw), cw, key) == w);
      CHECK(reversed(cstd(w, r)) == std_word(tr_word(w, r)));
    }
  }
  CHECK(rowwise_tableau(Partition{2, 1}) == Tableau({{1, 2}, {3}}));
  CHECK(columnwise_tableau(Partition{2, 1}) == Tableau({{1, 3}, {2}}));
  CHECK(columnwise_tableau(Partition{2, 2}, 4) == Tableau({{5, 7}, {6, 8}}));
}

TEST_CASE("transpose properties on small catalogs") {
  for (const auto& r : all_sequences(6, 3))
    for (const auto& rep : verify_trans_props(r)) {
      INFO(rep.name << " " << rep.counterexample);
      CHECK(rep.ok);
    }
  // LR words: every pair (LR tableau, standard tableau of the same shape)
  const RectSeq r = parse_rectseq("1x2,2x1");
  const auto words = enumerate_lr_words(r);
  CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
  for (const Word& w : words) CHECK(is_lr_word(w, r));
}
