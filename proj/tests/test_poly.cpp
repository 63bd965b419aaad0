#include "doctest.h"
#include "gkostka/charge.hpp"
#include "gkostka/poly.hpp"
#include "gkostka/verify.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace gkostka;

namespace {
QPoly q(int d) { return QPoly::monomial(d); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  QPoly p = q(1) + q(2);
  CHECK(to_string(p) == "q + q^2");
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(q(0)) == "1");
  CHECK(p.at_one() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.reflected(3) == q(2) + q(1));
  CHECK(q(1).leq(p));
  CHECK_FALSE(p.leq(q(1)));
  CHECK(nlohmann::json::parse(to_json(p)) == nlohmann::json::array({0, 1, 1}));
}

TEST_CASE("classical Kostka-Foulkes values") {
  // charge-graded values K_{lambda,(1^n)}(q), turned into cocharge form by reflection at n(1^n)
  struct Row {
    Partition lambda;
    QPoly charge;
  };
  const std::vector<Row> ones4{{Partition{4}, q(6)},
                               {Partition{3, 1}, q(3) + q(4) + q(5)},
                               {Partition{2, 2}, q(2) + q(4)},
                               {Partition{2, 1, 1}, q(1) + q(2) + q(3)},
                               {Partition{1, 1, 1, 1}, q(0)}};
  for (const auto& row : ones4)
    CHECK(kostka_foulkes(row.lambda, Partition{1, 1, 1, 1}) == row.charge.reflected(6));
  CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) == q(1) + q(2));
  CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 2}) == q(1));
  CHECK(kostka_foulkes(Partition{2, 2}, Partition{3, 1}).is_zero());
}

TEST_CASE("generalized Kostka polynomials") {
  const RectSeq r = parse_rectseq("4x3,2x3");
  const Tableau t({{1, 1, 1, 5, 5}, {2, 2, 2, 6}, {3, 3, 3}, {4, 4, 4}, {5, 6}, {6}});
  const QPoly k = kostka_poly(Partition{5, 4, 3, 3, 2, 1}, r);
  CHECK(k == q(charge_R(t, r)));
  CHECK(k.at_one() == 1);
  CHECK(kostka_poly(Partition{3, 3}, parse_rectseq("2x3")) == q(0));
  // rows of mu reproduce the classical polynomials, in charge form
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      std::vector<Rectangle> rows;
      for (int p : mu.parts()) rows.push_back({1, p});
      const auto ks = kostka_polys(RectSeq(rows));
      for (const auto& lambda : partitions_of(n)) {
        const QPoly a = ks.count(lambda) ? ks.at(lambda) : QPoly();
        CHECK(a == kostka_foulkes(lambda, mu).reflected(n_partition(mu)));
      }
    }
}

TEST_CASE("LR multiplicities") {
  CHECK(lr_mult(Partition{2}, parse_rectseq("1x1,1x1")) == 1);
  CHECK(lr_mult(Partition{5, 4, 3, 3, 2, 1}, parse_rectseq("4x3,2x3")) == 1);
  CHECK(lr_mult(Partition{3}, parse_rectseq("1x1,1x1")) == 0);
  for (const auto& r : all_sequences(6, 3)) {
    std::vector<oracle::Rect> rr;
    for (const auto& x : r.rects()) rr.push_back({x.rows, x.cols});
    const auto counts = oracle::lr_counts(rr);
    for (const auto& lambda : partitions_of(r.total_cells())) {
      const auto it = counts.find(lambda.parts());
      CHECK(lr_mult(lambda, r) == (it == counts.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("monotonicity and duality reports") {
  CHECK(verify_monotonicity(parse_rectseq("4x3,2x3"), parse_rectseq("3x3,3x3")).ok);
  const RectSeq r = parse_rectseq("2x2,1x1");
  CHECK(verify_monotonicity(r, r).ok);
  CHECK(verify_duality(parse_rectseq("2x3,2x3,3x2").dominant_form()).ok);
  CHECK_THROWS_AS((void)verify_monotonicity(parse_rectseq("3x3,3x3"), parse_rectseq("4x3,2x3")), InvalidInput);
}
