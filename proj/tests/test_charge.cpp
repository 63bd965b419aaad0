#include <algorithm>
#include <set>

#include "doctest.h"
#include "gkostka/charge.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"
#include "gkostka/transpose.hpp"
#include "gkostka/verify.hpp"
#include "oracles.hpp"

using namespace gkostka;

namespace {
const Tableau kIotaT({{1, 1, 1, 5, 5}, {2, 2, 2, 6}, {3, 3, 3}, {4, 4, 4}, {5, 6}, {6}});
}

TEST_CASE("two-rectangle statistics") {
  const Word w = row_word(kIotaT);
  CHECK(d_pair(w, {4, 3}, {2, 3}) == 3);
  CHECK(dtilde_pair(w, {4, 3}, {2, 3}) == 3);
  CHECK(d_pair(w, {4, 3}, {2, 3}) + dtilde_pair(w, {4, 3}, {2, 3}) == 6);
  // the stacked keys form a 6x3 rectangle
  const Word stacked = row_word(Tableau({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {5, 5, 5}, {6, 6, 6}}));
  CHECK(d_pair(stacked, {4, 3}, {2, 3}) == 0);
  CHECK_THROWS_AS((void)d_pair(Word{1, 2}, {2, 1}, {1, 1}), InvalidInput);
}

TEST_CASE("charge basics") {
  const RectSeq one = parse_rectseq("2x3");
  CHECK(charge_R(row_word(one.key(0)), one) == 0);
  CHECK(cocharge_R(row_word(one.key(0)), one) == 0);
  CHECK(n_stat(parse_rectseq("2x3,2x3,3x2")) == 14);
  CHECK(n_stat(one) == 0);
  CHECK(n_stat(parse_rectseq("1x2,1x1")) == 1);
  const RectSeq r = parse_rectseq("2x3,2x3,3x2");
  const Tableau t({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4, 5, 6}, {3, 4, 6}, {4, 7, 7}});
  CHECK(charge_R(t, r) + cocharge_R(t, r) == 14);
}

TEST_CASE("classical charge") {
  CHECK(ls_charge(Word{1, 1, 1}) == 0);
  CHECK(ls_charge(row_word(Tableau({{1, 1, 2}, {2}}))) == 1);
  // standard words of shape (2,1)
  std::set<int> cc{ls_cocharge(row_word(Tableau({{1, 2}, {3}}))), ls_cocharge(row_word(Tableau({{1, 3}, {2}})))};
  CHECK(cc == std::set<int>{1, 2});
  // compare with the oracle on every word of partition content up to size 6
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      Word w;
      for (int i = 0; i < mu.length(); ++i) w.insert(w.end(), mu[i], i + 1);
      do {
        CHECK(ls_charge(w) == oracle::charge(w));
        CHECK(ls_charge(w) + ls_cocharge(w) == n_partition(mu));
      } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("generalized charge on small catalogs") {
  for (const auto& r : all_sequences(6, 3)) {
    const int n = n_stat(r);
    for (const Word& w : enumerate_lr_words(r)) {
      const auto cp = charge_pair(w, r);
      CHECK(cp.charge + cp.cocharge == n);
      CHECK(cp.charge >= 0);
      CHECK(cp.charge == charge_R(insertion_tableau(w), r));
    }
  }
  // single rows in dominant order reduce to the classical charge
  for (const auto& mu : partitions_of(5)) {
    std::vector<Rectangle> rows;
    for (int p : mu.parts()) rows.push_back({1, p});
    const RectSeq r(rows);
    for (const Word& w : enumerate_lr_words(r)) CHECK(charge_R(w, r) == oracle::charge(w));
  }
  CHECK_THROWS_AS((void)charge_R(Word{1, 2}, parse_rectseq("2x1")), InvalidInput);
}
