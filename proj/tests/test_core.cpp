#include "doctest.h"
#include "gkostka/core.hpp"

using namespace gkostka;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{5, 4, 3, 3, 2, 1}) == Partition{6, 5, 4, 2, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{6, 6, 3, 3}) == Partition{4, 4, 4, 2, 2, 2});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == n);
    }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{1, 1, 1}));
  CHECK_FALSE(dominance_leq(Partition{2}, Partition{3}));
  // conjugation reverses dominance
  for (const auto& p : partitions_of(6))
    for (const auto& q : partitions_of(6))
      CHECK(dominance_leq(p, q) == dominance_leq(conjugate(q), conjugate(p)));
}

TEST_CASE("partition counts and n") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == expected[n]);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(n_partition(Partition{2, 1}) == 1);
  CHECK(n_partition(Partition{3, 3, 2}) == 7);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
}

TEST_CASE("reading words") {
  const Tableau t({{1, 2}, {3}});
  CHECK(row_word(t) == Word{3, 1, 2});
  CHECK(col_word(t) == Word{3, 1, 2});
  const Tableau y({{1, 1, 1}, {2, 2, 2}});
  CHECK(row_word(y) == Word{2, 2, 2, 1, 1, 1});
  CHECK(col_word(Tableau({{1, 1, 2}, {2, 3}})) == Word{2, 1, 3, 1, 2});
}

TEST_CASE("restriction") {
  CHECK(restrict(Word{2, 5, 1, 6}, Interval{1, 2}) == Word{2, 1});
  const Word w{3, 1, 4, 1, 5};
  CHECK(restrict(w, Interval{1, 5}) == w);
  const Tableau s({{1, 1, 1, 3, 4, 5}, {2, 2, 2, 4, 5, 6}, {3, 3, 6}, {4, 7, 7}});
  CHECK(restrict(s, Interval{1, 2}) == Tableau({{1, 1, 1}, {2, 2, 2}}));
  const Tableau sk = restrict(s, Interval{3, 4});
  CHECK(sk.inner() == Partition{3, 3});
  CHECK(row_word(sk) == Word{4, 3, 3, 4, 3, 4});
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tableau({{1, 2}, {1}}), InvalidInput);
  CHECK_THROWS_AS(Tableau({{2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), InvalidInput);
  const Tableau t({{1, 1, 2}, {2, 3}});
  CHECK(t.shape() == Partition{3, 2});
  CHECK(t.content(3) == std::vector<int>{2, 2, 1});
  CHECK_FALSE(t.is_standard());
  CHECK(Tableau({{1, 3}, {2}}).is_standard());
  CHECK(t.at(Cell{2, 2}) == 3);
}

TEST_CASE("text and json round trips") {
  const Tableau t({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4, 5, 6}, {3, 4, 6}, {4, 7, 7}});
  CHECK(tableau_from_text(to_text(t)) == t);
  CHECK(parse_tableau(to_json(t)) == t);
  CHECK(parse_tableau("[1 1 1 3 3 5/2 2 2 4 5 6/3 4 6/4 7 7]") == t);
  const Tableau sk = Tableau::skew(Partition{2, 1}, {{3}, {2}, {1}});
  CHECK(tableau_from_text(to_text(sk)) == sk);
  CHECK_THROWS_AS((void)tableau_from_text("1 x\n"), InvalidInput);
  CHECK(parse_partition("5,4,3") == Partition{5, 4, 3});
  CHECK(parse_word("(3,1,2)") == Word{3, 1, 2});
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
}
