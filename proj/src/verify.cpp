#include "gkostka/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "gkostka/catabolism.hpp"
#include "gkostka/charge.hpp"
#include "gkostka/cyclage.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/poly.hpp"
#include "gkostka/rsk.hpp"
#include "gkostka/transpose.hpp"

namespace gkostka {

namespace {

PropertyReport report(std::string name) {
  PropertyReport r;
  r.name = std::move(name);
  return r;
}

std::string seq_ctx(const RectSeq& r) { return "R=" + to_string(r); }

std::string tab_ctx(const Tableau& t) {
  std::string s = to_text(t);
  for (char& c : s)
    if (c == '\n') c = '/';
  if (!s.empty() && s.back() == '/') s.pop_back();
  return "[" + s + "]";
}

std::vector<int> width_totals(const RectSeq& r) {
  std::vector<int> tot(r.max_cols() + 1, 0);
  for (const auto& x : r.rects()) tot[x.cols] += x.cells();
  return tot;
}

RectSeq reversed_seq(const RectSeq& r) {
  auto v = r.rects();
  std::reverse(v.begin(), v.end());
  return RectSeq(std::move(v));
}

template <class T>
std::set<T> to_set(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end());
}

using Reports = std::vector<PropertyReport>;

Reports named(std::initializer_list<const char*> names) {
  Reports out;
  for (const char* n : names) out.push_back(report(n));
  return out;
}

// job(i) for every item on a worker pool; per-item reports are merged in item order, so the
// first counterexample and all counts do not depend on scheduling.
template <class Item, class Job>
Reports fan_out(const std::vector<Item>& items, Reports names, Job job) {
  const std::size_t n = items.size();
  std::vector<Reports> parts(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        parts[i] = job(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(hw, n); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& part : parts)
    for (std::size_t j = 0; j < names.size() && j < part.size(); ++j) {
      names[j].checked += part[j].checked;
      if (!part[j].ok && names[j].ok) names[j].fail(part[j].counterexample);
    }
  return names;
}

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.ok; });
}

std::vector<RectSeq> all_sequences(int max_cells, int max_rects) {
  std::vector<RectSeq> out;
  std::vector<Rectangle> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rects) return;
    for (int rows = 1; rows <= left; ++rows)
      for (int cols = 1; rows * cols <= left; ++cols) {
        cur.push_back({rows, cols});
        self(self, left - rows * cols);
        cur.pop_back();
      }
  };
  rec(rec, max_cells);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RectSeq> dominant_sequences(int max_cells, int max_rects) {
  std::vector<RectSeq> out;
  for (auto& r : all_sequences(max_cells, max_rects))
    if (r == r.dominant_form()) out.push_back(std::move(r));
  return out;
}

std::vector<RectSeq> nested_sequences(int max_cells) {
  std::vector<RectSeq> out;
  for (auto& r : all_sequences(max_cells, max_cells))
    if (r.is_nested()) out.push_back(std::move(r));
  return out;
}

std::vector<std::pair<RectSeq, RectSeq>> comparable_pairs(int max_cells, int max_rects) {
  std::vector<std::pair<RectSeq, RectSeq>> out;
  const auto doms = dominant_sequences(max_cells, max_cells);
  std::map<std::vector<int>, std::vector<RectSeq>> by_totals;
  for (const auto& s : doms) by_totals[width_totals(s)].push_back(s);
  for (const auto& r : doms) {
    if (r.count() > max_rects) continue;
    for (const auto& s : by_totals[width_totals(r)]) {
      if (s == r || !pseudo_geq(r, s)) continue;
      out.emplace_back(r, s);
      const RectSeq rs = reversed_seq(s);
      if (rs != s) out.emplace_back(r, rs);
    }
  }
  return out;
}

SuiteResult verify_charge_comp(int max_cells, int max_rects) {
  SuiteResult res{"charge-comp", {}};
  const Reports names = named({
      "charge + cocharge = n(R)",
      "charge constant on Knuth classes",
      "charge invariant under tau_p",
      "rows case agrees with classical charge",
  });
  res.reports = fan_out(all_sequences(max_cells, max_rects), names, [&](const RectSeq& r) {
    Reports rs = names;
    auto& sum = rs[0];
    auto& knuth = rs[1];
    auto& tau = rs[2];
    auto& ls = rs[3];
    const int n = n_stat(r);
    std::map<Tableau, int> by_p;
    const bool kostka = r.is_rows() && r == r.dominant_form();
    for (const Word& w : enumerate_lr_words(r)) {
      const auto cp = charge_pair(w, r);
      ++sum.checked;
      if (cp.charge + cp.cocharge != n || cp.charge < 0 || cp.cocharge < 0)
        sum.fail(seq_ctx(r) + " w=" + to_string(w));
      ++knuth.checked;
      auto [it, fresh] = by_p.emplace(insertion_tableau(w), cp.charge);
      if (!fresh && it->second != cp.charge) knuth.fail(seq_ctx(r) + " w=" + to_string(w));
      for (int p = 0; p + 1 < r.count(); ++p) {
        ++tau.checked;
        if (charge_R(tau_p(w, r, p), swapped(r, p)) != cp.charge)
          tau.fail(seq_ctx(r) + " w=" + to_string(w) + " p=" + std::to_string(p + 1));
      }
      if (kostka) {
        ++ls.checked;
        if (ls_charge(w) != cp.charge) ls.fail(seq_ctx(r) + " w=" + to_string(w));
      }
    }
    return rs;
  });
  return res;
}

SuiteResult verify_embedding_thm(int max_cells, int max_rects) {
  SuiteResult res{"embedding-thm", {}};
  const Reports names = named({
      "theta independent of the chain",
      "theta injective, shape and charge preserving",
      "word theta keeps Q and commutes with P",
      "cocyclage covers map onto the full image subposet",
      "theta composes along intermediate sequences",
      "strong covers and chi commute with theta (containment-ordered R)",
  });
  const auto pairs = comparable_pairs(max_cells, max_rects);
  res.reports = fan_out(pairs, names, [&](const std::pair<RectSeq, RectSeq>& pr) {
    Reports rs = names;
    auto& indep = rs[0];
    auto& inj = rs[1];
    auto& words = rs[2];
    auto& covers = rs[3];
    auto& func = rs[4];
    auto& strong = rs[5];
    const auto& [r, s] = pr;
    const std::string ctx = seq_ctx(r) + " R'=" + to_string(s);
    const auto canon = chain_between(r, s, ChainStrategy::Canonical);
    const auto front = chain_between(r, s, ChainStrategy::AtFront);
    const auto lrt = enumerate_lrt_all(r);
    std::map<Tableau, Tableau> img;
    std::set<Tableau> seen;
    for (const auto& t : lrt) {
      const Word w = row_word(t);
      const Tableau a = insertion_tableau(theta_along(w, r, canon));
      const Tableau b = insertion_tableau(theta_along(w, r, front));
      ++indep.checked;
      if (a != b) indep.fail(ctx + " T=" + tab_ctx(t));
      ++inj.checked;
      if (!is_lr_tableau(a, s) || a.shape() != t.shape() || !seen.insert(a).second ||
          charge_R(a, s) != charge_R(t, r))
        inj.fail(ctx + " T=" + tab_ctx(t));
      img.emplace(t, a);
    }
    // word level on every LR word when the word set is small
    if (r.total_cells() <= 6) {
      for (const Word& w : enumerate_lr_words(r)) {
        ++words.checked;
        const Word v = theta_along(w, r, canon);
        const RSKPair pw = rsk(w), pv = rsk(v);
        if (pv.q != pw.q || pv.p != img.at(pw.p) || v != theta_along(w, r, front))
          words.fail(ctx + " w=" + to_string(w));
      }
    }
    // covers in R versus covers among the image in R'
    std::set<std::pair<Tableau, Tableau>> mapped, target;
    for (const auto& t : lrt)
      for (const auto& c : cocyclage_covers(t, r)) mapped.insert({img.at(c.lower), img.at(t)});
    for (const auto& t : seen)
      for (const auto& c : cocyclage_covers(t, s))
        if (seen.count(c.lower)) target.insert({c.lower, t});
    ++covers.checked;
    if (mapped != target) covers.fail(ctx);
    // functoriality through R' down to rows(R)
    const RectSeq rows = r.rows_seq();
    const auto c1 = chain_between(r, rows);
    const auto c2 = chain_between(s, rows);
    for (const auto& t : lrt) {
      ++func.checked;
      const Word direct = theta_along(row_word(t), r, c1);
      const Word twostep = theta_along(row_word(img.at(t)), s, c2);
      if (insertion_tableau(direct) != insertion_tableau(twostep)) func.fail(ctx + " T=" + tab_ctx(t));
    }
    // strong covers for sequences with a containment-ordered rearrangement
    if (r.dominant_form().is_nested() && r.total_cells() <= 7) {
      for (const Word& w : enumerate_lr_words(r)) {
        Word u(w.begin(), w.end() - 1);
        const bool st = is_strong_cover(u, w.back(), r);
        const Word v = theta_along(w, r, canon);
        Word vu(v.begin(), v.end() - 1);
        ++strong.checked;
        if (st != is_strong_cover(vu, v.back(), s)) {
          strong.fail(ctx + " w=" + to_string(w));
          continue;
        }
        if (st && theta_along(chi_R(w, r), r, canon) != chi_R(v, s)) strong.fail(ctx + " chi w=" + to_string(w));
      }
    }
    return rs;
  });
  return res;
}

SuiteResult verify_rect_mono(int max_cells, int max_rects) {
  SuiteResult res{"rect-mono", {}};
  const Reports names = named({
      "K_{lambda;R} <= K_{lambda;R'} witnessed by theta",
  });
  const auto pairs = comparable_pairs(max_cells, max_rects);
  res.reports = fan_out(pairs, names, [&](const std::pair<RectSeq, RectSeq>& pr) {
    Reports rs = names;
    auto& agg = rs[0];
    const auto& [r, s] = pr;
    if (!s.is_dominant()) return rs;
    const auto rep = verify_monotonicity(r, s);
    agg.checked += rep.checked;
    if (!rep.ok) agg.fail(rep.name + ": " + rep.counterexample);
    return rs;
  });
  return res;
}

SuiteResult verify_embed_image(int max_cells, int max_rects) {
  SuiteResult res{"embed-image", {}};
  auto img = report("image of theta_R equals the multi-type image test");
  auto mono = report("R >= R' implies image containment");
  std::map<RectSeq, std::set<Tableau>> images;
  for (const auto& r : all_sequences(max_cells, max_rects)) {
    const auto im = to_set(theta_image(r));
    images[r] = im;
    for (const auto& s : enumerate_cst_all(r.gamma())) {
      ++img.checked;
      if (theta_image_contains(s, r) != static_cast<bool>(im.count(s))) img.fail(seq_ctx(r) + " S=" + tab_ctx(s));
    }
  }
  for (const auto& [r, im] : images)
    for (const auto& [s, is] : images) {
      if (r == s || r.gamma() != s.gamma() || !pseudo_geq(r, s)) continue;
      ++mono.checked;
      if (!std::includes(is.begin(), is.end(), im.begin(), im.end()))
        mono.fail(seq_ctx(r) + " R'=" + to_string(s));
    }
  res.reports = {img, mono};
  return res;
}

SuiteResult verify_atom_thm(int max_cells) {
  SuiteResult res{"atom-thm", {}};
  const Reports names = named({
      "image = catabolizable = column-catabolizable = ctype dominance",
      "matom(R) = {S : ctype(S) = xi(R)}",
      "xi^k(S) is a partition",
  });
  res.reports = fan_out(nested_sequences(max_cells), names, [&](const RectSeq& r) {
    Reports rs = names;
    auto& sets = rs[0];
    auto& atoms = rs[1];
    auto& part = rs[2];
    const auto im = to_set(theta_image(r));
    const auto at = to_set(matom(r, max_cells));
    const XiStat xr = trimmed(r.xi());
    for (const auto& s : enumerate_cst_all(r.gamma())) {
      const std::string ctx = seq_ctx(r) + " S=" + tab_ctx(s);
      ++sets.checked;
      const bool a = im.count(s) > 0;
      const bool b = is_catabolizable(s, r, SliceMode::Row);
      const bool c = is_catabolizable(s, r, SliceMode::Col);
      const bool d = ctype_dominates(s, r);
      if (a != b || a != c || a != d) sets.fail(ctx);
      ++atoms.checked;
      ++part.checked;
      XiStat ct;
      try {
        ct = trimmed(ctype(s).xi);
      } catch (const ConsistencyError& e) {
        part.fail(ctx + " " + e.what());
        continue;
      }
      if ((ct == xr) != static_cast<bool>(at.count(s))) atoms.fail(ctx);
    }
    return rs;
  });
  return res;
}

SuiteResult verify_poset_transpose(int max_cells, int max_rects) {
  SuiteResult res{"poset-transpose", {}};
  const Reports names = named({
      "tr_R maps R-cocyclage covers onto R^t-cyclage covers",
      "charge_R = cocharge_{R^t} o tr_R",
      "minimal elements: exactly a columns / exactly b rows",
      "strong cocyclage contains cocyclage and orbit test matches charge step",
      "containment-ordered R: strong test is x outside A_1",
  });
  res.reports = fan_out(all_sequences(max_cells, max_rects), names, [&](const RectSeq& r) {
    Reports rs = names;
    auto& iso = rs[0];
    auto& grade = rs[1];
    auto& minimal = rs[2];
    auto& strong = rs[3];
    auto& nested = rs[4];
    const RectSeq rt = r.transposed();
    const auto co = build_poset(r, PosetOrder::Cocyclage, max_cells);
    const auto cy = build_poset(rt, PosetOrder::Cyclage, max_cells);
    std::set<std::pair<Tableau, Tableau>> mapped, target;
    for (const auto& e : co.covers) mapped.insert({tr_tab(co.nodes[e.lower], r), tr_tab(co.nodes[e.upper], r)});
    for (const auto& e : cy.covers) target.insert({cy.nodes[e.lower], cy.nodes[e.upper]});
    ++iso.checked;
    std::set<Tableau> trn;
    for (std::size_t i = 0; i < co.nodes.size(); ++i) {
      const Tableau t = tr_tab(co.nodes[i], r);
      trn.insert(t);
      ++grade.checked;
      if (co.grade[i] != cy.grade[cy.index_of(t)]) grade.fail(seq_ctx(r) + " T=" + tab_ctx(co.nodes[i]));
    }
    if (mapped != target || trn != to_set(cy.nodes)) iso.fail(seq_ctx(r));
    std::set<std::size_t> has_lower_co, has_lower_cy;
    for (const auto& e : co.covers) has_lower_co.insert(e.upper);
    for (const auto& e : cy.covers) has_lower_cy.insert(e.upper);
    for (std::size_t i = 0; i < co.nodes.size(); ++i) {
      ++minimal.checked;
      if ((co.nodes[i].num_cols() == r.max_cols()) == static_cast<bool>(has_lower_co.count(i)))
        minimal.fail(seq_ctx(r) + " T=" + tab_ctx(co.nodes[i]));
      if ((cy.nodes[i].num_rows() == rt.max_rows()) == static_cast<bool>(has_lower_cy.count(i)))
        minimal.fail(seq_ctx(rt) + " T=" + tab_ctx(cy.nodes[i]));
    }
    // strong order: orbit test against the charge step on every corner
    const auto sp = build_poset(r, PosetOrder::Strong, max_cells);
    std::set<std::pair<std::size_t, std::size_t>> se;
    for (const auto& e : sp.covers) se.insert({e.lower, e.upper});
    ++strong.checked;
    for (const auto& e : co.covers)
      if (!se.count({e.lower, e.upper})) strong.fail(seq_ctx(r) + " missing cover");
    for (std::size_t i = 0; i < sp.nodes.size(); ++i) {
      const Tableau& t = sp.nodes[i];
      for (const Cell& c : corners(t.shape())) {
        auto [u, x] = reverse_row_insert(t, c);
        Word w = row_word(u);
        w.push_back(x);
        const bool orbit_test = is_strong_cover(row_word(u), x, r);
        const bool step = charge_R(chi_R(w, r), r) == charge_R(w, r) - 1;
        ++strong.checked;
        if (orbit_test != step)
          strong.fail(seq_ctx(r) + " T=" + tab_ctx(t) + " corner row " + std::to_string(c.row));
        if (r.is_nested()) {
          ++nested.checked;
          if (orbit_test != !r.subalphabet(0).contains(x)) nested.fail(seq_ctx(r) + " T=" + tab_ctx(t));
        }
      }
    }
    return rs;
  });
  return res;
}

SuiteResult verify_poly_transpose(int max_cells, int max_rects) {
  SuiteResult res{"poly-transpose", {}};
  const Reports names = named({
      "K_{lambda^t;R'}(q) = q^{n(R)} K_{lambda;R}(1/q)",
  });
  res.reports = fan_out(dominant_sequences(max_cells, max_rects), names, [&](const RectSeq& r) {
    Reports rs = names;
    auto& agg = rs[0];
    const auto rep = verify_duality(r);
    agg.checked += rep.checked;
    if (!rep.ok) agg.fail(rep.name + ": " + rep.counterexample);
    return rs;
  });
  return res;
}

SuiteResult verify_kostka(int max_size) {
  SuiteResult res{"kostka", {}};
  auto rows = report("K_{lambda;rows(mu)} = q^{n(mu)} Ktilde_{lambda,mu}(1/q)");
  auto cols = report("K_{lambda^t;columns(mu)} = Ktilde_{lambda,mu}");
  auto cstd_map = report("cyclage standardization preserves cocharge");
  auto small = report("Ktilde_{(2,1),(1,1,1)} = q + q^2");
  ++small.checked;
  if (kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) != QPoly::monomial(1) + QPoly::monomial(2))
    small.fail(to_string(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1})));
  for (int n = 1; n <= max_size; ++n)
    for (const auto& mu : partitions_of(n)) {
      std::vector<Rectangle> rr, cc;
      for (int p : mu.parts()) {
        rr.push_back({1, p});
        cc.push_back({p, 1});
      }
      const RectSeq rs(rr), cs(cc);
      const int nm = n_partition(mu);
      const auto kr = kostka_polys(rs);
      const auto kc = kostka_polys(cs);
      for (const auto& lambda : partitions_of(n)) {
        const QPoly kf = kostka_foulkes(lambda, mu);
        const std::string ctx = "lambda=" + to_string(lambda) + " mu=" + to_string(mu);
        ++rows.checked;
        const QPoly a = kr.count(lambda) ? kr.at(lambda) : QPoly();
        if (a != kf.reflected(nm)) rows.fail(ctx + ": " + to_string(a) + " vs " + to_string(kf));
        ++cols.checked;
        const QPoly b = kc.count(conjugate(lambda)) ? kc.at(conjugate(lambda)) : QPoly();
        if (b != kf) cols.fail(ctx + ": " + to_string(b) + " vs " + to_string(kf));
      }
      // tr_{(1)^n} o theta_{R^t} o tr_R from CST(mu) to standard tableaux
      const RectSeq singles(std::vector<Rectangle>(n, Rectangle{1, 1}));
      std::set<Tableau> out;
      for (const auto& t : enumerate_cst_all(mu.parts())) {
        const Tableau s = tr_tab(theta_rows(tr_tab(t, rs), cs), singles);
        ++cstd_map.checked;
        if (!s.is_standard() || ls_cocharge(row_word(s)) != ls_cocharge(row_word(t)) || !out.insert(s).second)
          cstd_map.fail("mu=" + to_string(mu) + " T=" + tab_ctx(t));
      }
    }
  res.reports = {rows, cols, cstd_map, small};
  return res;
}

SuiteResult verify_lr_oracle(int max_cells, int max_rects) {
  SuiteResult res{"lr-oracle", {}};
  const Reports names = named({
      "K_{lambda;R}(1) = iterated LR multiplicity",
  });
  res.reports = fan_out(all_sequences(max_cells, max_rects), names, [&](const RectSeq& r) {
    Reports rs = names;
    auto& agg = rs[0];
    const auto ks = kostka_polys(r);
    for (const auto& lambda : partitions_of(r.total_cells())) {
      ++agg.checked;
      const std::int64_t k = ks.count(lambda) ? ks.at(lambda).at_one() : 0;
      const std::int64_t m = lr_mult(lambda, r);
      if (k != m)
        agg.fail(seq_ctx(r) + " lambda=" + to_string(lambda) + ": " + std::to_string(k) + " vs " +
                 std::to_string(m));
    }
    return rs;
  });
  return res;
}

namespace {

void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    cur.push_back(a);
    compositions(n - a, cur, out);
    cur.pop_back();
  }
}

// Column-strict tableaux of the given shape with letters in [lo, hi].
std::vector<Tableau> cst_in_interval(const Partition& shape, Interval b) {
  std::vector<Tableau> out;
  const int m = b.size();
  std::vector<int> content(m, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      content[i] = left;
      for (const auto& t : enumerate_cst(shape, content)) {
        auto rows = t.rows();
        for (auto& row : rows)
          for (auto& x : row) x += b.lo - 1;
        out.push_back(Tableau::unchecked(Partition(), rows));
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      content[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (m > 0) rec(rec, 0, shape.size());
  return out;
}

Tableau std_tableau(const Tableau& p, const AnchorTableaux& from, const AnchorTableaux& to) {
  Tableau out;
  if (!word_fits_shape(std_general(row_word(p), from, to), p.shape(), &out))
    throw ConsistencyError("standardized tableau word does not fit the shape");
  return out;
}

}  // namespace

SuiteResult verify_std_props(int max_cells, int max_std) {
  SuiteResult res{"std-props", {}};
  auto image = report("std image criterion matches enumeration");
  auto rowwise = report("rowwise anchors give Schensted standardization");
  auto lemma = report("anchor changes keep tableau words, Knuth classes, P and Q");
  std::vector<PropertyReport> trans;
  for (int n = 1; n <= max_std; ++n) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, cur, comps);
    Word perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (const auto& alpha : comps) {
      std::set<Word> oracle;
      Word w;
      for (std::size_t i = 0; i < alpha.size(); ++i) w.insert(w.end(), alpha[i], static_cast<Letter>(i + 1));
      do oracle.insert(std_word(w));
      while (std::next_permutation(w.begin(), w.end()));
      Word v = perm;
      do {
        ++image.checked;
        if (std_image_check(v, alpha) != static_cast<bool>(oracle.count(v)))
          image.fail("v=" + to_string(v) + " alpha=" + to_string(Word(alpha.begin(), alpha.end())));
      } while (std::next_permutation(v.begin(), v.end()));
    }
  }
  for (const auto& r : all_sequences(max_cells, 3)) {
    for (auto& rep : verify_trans_props(r, max_cells)) {
      auto it = std::find_if(trans.begin(), trans.end(), [&](const auto& x) { return x.name == rep.name; });
      if (it == trans.end()) {
        trans.push_back(report(rep.name));
        it = trans.end() - 1;
      }
      it->checked += rep.checked;
      if (!rep.ok) it->fail(seq_ctx(r) + " " + rep.counterexample);
    }
    const auto words = enumerate_lr_words(r);
    const auto keys = key_anchors(r);
    const auto rw = rowwise_anchors(r);
    for (const Word& w : words) {
      ++rowwise.checked;
      if (std_general(w, keys, rw) != std_word(w)) rowwise.fail(seq_ctx(r) + " w=" + to_string(w));
    }
    if (r.total_cells() > 6) continue;
    // vary one block's anchor over all column-strict fillings in an alphabet one letter larger
    std::vector<AnchorTableaux> targets;
    for (int i = 0; i < r.count(); ++i) {
      AnchorTableaux base;
      Letter lo = 1;
      for (int j = 0; j < r.count(); ++j) {
        const int size = r[j].rows + (j == i ? 1 : 0);
        base.blocks.push_back({lo, lo + size - 1});
        base.z.push_back(key_rect(r[j].cols, r[j].rows, base.blocks.back()));
        lo += size;
      }
      for (const auto& z : cst_in_interval(r[i].partition(), base.blocks[i])) {
        AnchorTableaux a = base;
        a.z[i] = z;
        targets.push_back(a);
      }
    }
    for (const auto& to : targets) {
      std::map<Tableau, Tableau> pmap;
      for (const Word& w : words) {
        const Word v = std_general(w, keys, to);
        const RSKPair pw = rsk(w), pv = rsk(v);
        ++lemma.checked;
        const bool tw = row_word(pw.p) == w, tv = row_word(pv.p) == v;
        auto [it, fresh] = pmap.emplace(pw.p, pv.p);
        if (tw != tv || pv.q != pw.q || (!fresh && it->second != pv.p) || pv.p != std_tableau(pw.p, keys, to) ||
            std_general(v, to, keys) != w)
          lemma.fail(seq_ctx(r) + " w=" + to_string(w));
      }
    }
  }
  res.reports = {image, rowwise, lemma};
  res.reports.insert(res.reports.end(), trans.begin(), trans.end());
  return res;
}

SuiteResult verify_atom_conjecture(int max_cells) {
  SuiteResult res{"atom-conjecture", {}};
  auto atoms = report("matom(R) = {S : ctype(S) = xi(R)} for every R with gamma(R) = gamma");
  auto poly = report("K_{lambda;R} = sum of q^charge over S with ctype(S) >= xi(R)");
  auto part = report("multi-atoms partition CST(gamma)");
  for (int n = 1; n <= max_cells; ++n)
    for (const auto& gamma : partitions_of(n)) {
      const auto seqs = dominant_sequences_with_gamma(gamma);
      const auto cst = enumerate_cst_all(gamma.parts());
      std::map<Tableau, XiStat> ct;
      std::map<Tableau, int> charge;
      for (const auto& s : cst) {
        ct[s] = trimmed(ctype(s).xi);
        charge[s] = ls_charge(row_word(s));
      }
      std::map<RectSeq, std::set<Tableau>> images;
      for (const auto& r : seqs) images[r] = to_set(theta_image(r));
      std::map<Tableau, int> owners;
      for (const auto& r : seqs) {
        std::set<Tableau> higher;
        for (const auto& rp : seqs)
          if (pseudo_geq(rp, r) && !pseudo_geq(r, rp)) higher.insert(images[rp].begin(), images[rp].end());
        const XiStat xr = trimmed(r.xi());
        std::map<Partition, QPoly> by_ctype;
        for (const auto& s : cst) {
          const bool in_atom = images[r].count(s) && !higher.count(s);
          if (in_atom) ++owners[s];
          ++atoms.checked;
          if (in_atom != (ct[s] == xr)) atoms.fail(seq_ctx(r) + " S=" + tab_ctx(s) + " ctype " + to_string(ct[s]));
          bool dom = true;
          for (std::size_t k = 0; k < std::max(ct[s].size(), xr.size()); ++k)
            if (!dominance_leq(k < xr.size() ? xr[k] : Partition(), k < ct[s].size() ? ct[s][k] : Partition()))
              dom = false;
          if (dom) by_ctype[s.shape()].add(charge[s], 1);
        }
        const auto kp = kostka_polys(r);
        std::set<Partition> shapes;
        for (const auto& [sh, p] : kp) shapes.insert(sh);
        for (const auto& [sh, p] : by_ctype) shapes.insert(sh);
        for (const auto& sh : shapes) {
          ++poly.checked;
          const QPoly a = kp.count(sh) ? kp.at(sh) : QPoly();
          const QPoly b = by_ctype.count(sh) ? by_ctype.at(sh) : QPoly();
          if (a != b)
            poly.fail(seq_ctx(r) + " lambda=" + to_string(sh) + ": " + to_string(a) + " vs " + to_string(b));
        }
      }
      for (const auto& s : cst) {
        ++part.checked;
        if (owners[s] != 1) part.fail("gamma=" + to_string(gamma) + " S=" + tab_ctx(s));
      }
    }
  res.reports = {atoms, poly, part};
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"charge-comp",     "embedding-thm", "rect-mono", "embed-image",
                                              "poset-transpose", "poly-transpose", "atom-thm", "kostka",
                                              "lr-oracle",       "std-props",      "atom-conjecture"};
  return names;
}

SuiteResult run_suite(const std::string& name, int max_cells) {
  if (name == "charge-comp") return verify_charge_comp(max_cells);
  if (name == "embedding-thm") return verify_embedding_thm(max_cells);
  if (name == "rect-mono") return verify_rect_mono(max_cells);
  if (name == "embed-image") return verify_embed_image(max_cells);
  if (name == "poset-transpose") return verify_poset_transpose(max_cells);
  if (name == "poly-transpose") return verify_poly_transpose(max_cells);
  if (name == "atom-thm") return verify_atom_thm(max_cells);
  if (name == "kostka") return verify_kostka(std::min(max_cells, 7));
  if (name == "lr-oracle") return verify_lr_oracle(max_cells);
  if (name == "std-props") return verify_std_props(max_cells);
  if (name == "atom-conjecture") return verify_atom_conjecture(max_cells);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace gkostka
