// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gkostka/catabolism.hpp"
#include "gkostka/charge.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/lrwords.hpp"
#include "gkostka/poly.hpp"
#include "gkostka/rsk.hpp"
#include "gkostka/transpose.hpp"
#include "gkostka/verify.hpp"

using namespace gkostka;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_suites(const std::vector<SuiteResult>& suites) {
  Outcome o;
  std::ostringstream d;
  for (const auto& s : suites)
    for (const auto& r : s.reports) {
      d << (d.tellp() > 0 ? "; " : "") << r.name << " [" << r.checked << "]";
      if (!r.ok) {
        o.pass = false;
        d << " FAILED at " << r.counterexample;
      }
    }
  o.detail = d.str();
  return o;
}

struct Golden {
  std::vector<std::string> failed;
  void check(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

Outcome golden() {
  Golden g;
  const RectSeq ri = parse_rectseq("4x3,2x3"), si = parse_rectseq("3x3,3x3");
  const Partition lambda{5, 4, 3, 3, 2, 1};
  const Tableau t({{1, 1, 1, 5, 5}, {2, 2, 2, 6}, {3, 3, 3}, {4, 4, 4}, {5, 6}, {6}});
  const Tableau t2({{1, 1, 1, 4, 4}, {2, 2, 2, 5}, {3, 3, 3}, {4, 5, 6}, {5, 6}, {6}});
  g.check(enumerate_lrt(lambda, ri) == std::vector<Tableau>{t}, "LRT(lambda; R) = {T}");
  g.check(enumerate_lrt(lambda, si) == std::vector<Tableau>{t2}, "LRT(lambda; R') = {T'}");
  g.check(iota(t, 3, 4, 2) == t2 && theta(t, ri, si) == t2, "iota(T) = T'");
  g.check(t.shape() == lambda && t2.shape() == lambda, "shapes");

  const RectSeq r = parse_rectseq("2x3,2x3,3x2");
  const Tableau s({{1, 1, 1, 3, 4, 5}, {2, 2, 2, 4, 5, 6}, {3, 3, 6}, {4, 7, 7}});
  const Tableau colcat({{3, 3, 3, 6, 7}, {4, 4, 4, 7}, {5, 5}, {6}});
  const Tableau y3({{5, 5}, {6, 6}, {7, 7}});
  g.check(restrict(s, r.subalphabet(0)) == r.key(0), "S|A_1 = Y_1");
  g.check(cat_step(s, r[0], SliceMode::Col) == colcat, "colcat(S)");
  const Tableau skew = Tableau::skew(Partition{2, 2}, {{5, 5}, {6}, {6, 7}, {7}});
  g.check(cat_step(colcat, r[1], SliceMode::Col, 2) == y3, "cat_R2 cat_R1(S) = Y_3");
  g.check(knuth_equivalent(row_word(skew), row_word(y3)), "skew display ~K Y_3");

  const Tableau v3({{1, 1, 1, 6, 7}, {2, 2, 2, 7}, {3, 3, 3}, {4, 4, 4}, {5, 5}, {6}});
  const Tableau v33({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {5, 5}, {6, 6}, {7, 7}});
  g.check(slice(s, SliceMode::Col, 3) == v3, "V_3(S)");
  g.check(slice(v3, SliceMode::Col, 3) == v33, "V_3^2(S)");
  const std::vector<std::vector<Letter>> below(v33.rows().begin() + 4, v33.rows().end());
  g.check(restrict(v33, Interval{1, 4}) == key_rect(3, 4, Interval{1, 4}) && below == y3.rows(), "S hat");
  const auto ct = ctype(s);
  g.check(to_string(trimmed(ct.xi)) == "(); (3); (2,2)", "ctype(S)");

  const Tableau tt({{1, 1, 4, 4}, {2, 2, 5, 7}, {3, 3, 7, 8}, {5, 6}, {6, 7}, {8, 8}});
  const Tableau tr({{1, 1, 1, 3, 3, 5}, {2, 2, 2, 4, 5, 6}, {3, 4, 6}, {4, 7, 7}});
  g.check(tr_tab(tr, r) == tt, "T -> T^t");
  g.check(tt.shape() == Partition{4, 4, 4, 2, 2, 2}, "shape of T^t");

  Outcome o;
  o.pass = g.failed.empty();
  if (o.pass) {
    o.detail = "two-rectangle embedding, catabolism, ctype and transpose examples reproduced";
  } else {
    for (const auto& f : g.failed) o.detail += (o.detail.empty() ? "" : ", ") + f;
  }
  return o;
}

Outcome kostka_consistency() {
  Outcome o = from_suites({verify_kostka(7)});
  const QPoly k = kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1});
  const bool small = k == QPoly::monomial(1) + QPoly::monomial(2);
  o.detail += "; K~_{(2,1),(1^3)} = " + to_string(k);
  o.pass = o.pass && small;
  return o;
}

Outcome atom_conjecture() {
  const SuiteResult s = verify_atom_conjecture(8);
  Outcome o;
  bool holds = true;
  std::ostringstream d;
  for (const auto& r : s.reports) {
    d << (d.tellp() > 0 ? "; " : "") << r.name << " [" << r.checked << "]";
    if (!r.ok) {
      holds = false;
      d << " counterexample " << r.counterexample;
    }
  }
  // completion with a definitive verdict is the criterion
  o.pass = !s.reports.empty();
  o.detail = std::string("verdict ") + (holds ? "PASS" : "COUNTEREXAMPLE") + ": " + d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden examples", golden},
      {"charge + cocharge = n(R)", [] { return from_suites({verify_charge_comp(8, 3)}); }},
      {"embedding theorem", [] { return from_suites({verify_embedding_thm(8)}); }},
      {"rectangle monotonicity", [] { return from_suites({verify_rect_mono(8)}); }},
      {"image, catabolism and atoms", [] { return from_suites({verify_embed_image(8), verify_atom_thm(8)}); }},
      {"transpose duality", [] { return from_suites({verify_poset_transpose(8), verify_poly_transpose(8)}); }},
      {"Kostka consistency", kostka_consistency},
      {"q = 1 oracle", [] { return from_suites({verify_lr_oracle(8)}); }},
      {"standardization suite", [] { return from_suites({verify_std_props(8)}); }},
      {"atom conjecture checker", atom_conjecture},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first
              << " (exact, " << dt.count() << " s) " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
