#include "gkostka/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "gkostka/catabolism.hpp"
#include "gkostka/rsk.hpp"

namespace gkostka {

const std::optional<Tableau>& two_rect_lrt(const Partition& shape, Rectangle r1, Rectangle r2) {
  using Key = std::tuple<std::vector<int>, int, int, int, int>;
  thread_local std::map<Key, std::optional<Tableau>> cache;
  Key key{shape.parts(), r1.rows, r1.cols, r2.rows, r2.cols};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Rectangle> rs;
  if (r1.rows > 0) rs.push_back(r1);
  if (r2.rows > 0) rs.push_back(r2);
  auto found = enumerate_lrt(shape, RectSeq(rs));
  if (found.size() > 1) throw ConsistencyError("two-rectangle LR tableaux are not unique");
  std::optional<Tableau> v;
  if (!found.empty()) v = found.front();
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

Word local_word(const Word& w, Interval b) {
  Word out;
  for (Letter x : w)
    if (b.contains(x)) out.push_back(x - b.lo + 1);
  return out;
}

Word replace_block(const Word& w, Interval b, const Tableau& p) {
  const RSKPair pq = rsk(local_word(w, b));
  Word nw = inverse_rsk(p, pq.q);
  Word out = w;
  std::size_t k = 0;
  for (Letter& x : out)
    if (b.contains(x)) x = nw[k++] + b.lo - 1;
  return out;
}

RectSeq swapped(const RectSeq& r, int p) {
  auto rects = r.rects();
  std::swap(rects.at(p), rects.at(p + 1));
  return RectSeq(std::move(rects));
}

namespace {

Interval pair_block(const RectSeq& r, int p) {
  return {r.subalphabet(p).lo, r.subalphabet(p + 1).hi};
}

Word tau_unchecked(const Word& w, const RectSeq& r, int p) {
  if (r[p] == r[p + 1]) return w;
  const Interval b = pair_block(r, p);
  const Partition shape = insertion_tableau(local_word(w, b)).shape();
  const auto& target = two_rect_lrt(shape, r[p + 1], r[p]);
  if (!target) throw ConsistencyError("tau_p: no LR tableau of the same shape for the swapped pair");
  return replace_block(w, b, *target);
}

}  // namespace

Word tau_p(const Word& w, const RectSeq& r, int p) {
  if (p < 0 || p + 1 >= r.count()) throw InvalidInput("tau_p: position out of range");
  if (!is_lr_word(w, r)) throw InvalidInput("tau_p: word is not an LR word for the sequence");
  return tau_unchecked(w, r, p);
}

Tableau tau_p(const Tableau& t, const RectSeq& r, int p) { return insertion_tableau(tau_p(row_word(t), r, p)); }

std::vector<OrbitElement> orbit(const Word& w, const RectSeq& r, std::size_t max_size) {
  std::vector<OrbitElement> out{{r, w}};
  std::map<RectSeq, std::size_t> seen{{r, 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int p = 0; p + 1 < out[i].seq.count(); ++p) {
      if (out[i].seq[p] == out[i].seq[p + 1]) continue;
      RectSeq ns = swapped(out[i].seq, p);
      Word nw = tau_unchecked(out[i].word, out[i].seq, p);
      auto it = seen.find(ns);
      if (it != seen.end()) {
        if (out[it->second].word != nw) throw ConsistencyError("rectangle permutation action is not well defined");
        continue;
      }
      if (out.size() >= max_size) throw InvalidInput("orbit: too many arrangements of the rectangles");
      seen.emplace(ns, out.size());
      out.push_back({std::move(ns), std::move(nw)});
    }
  }
  return out;
}

Tableau iota(const Tableau& t, int k, int eta1, int eta2) {
  if (eta1 - 1 < eta2 + 1) throw InvalidInput("iota needs eta1 - 1 >= eta2 + 1");
  const RectSeq r(eta2 > 0 ? std::vector<Rectangle>{{eta1, k}, {eta2, k}} : std::vector<Rectangle>{{eta1, k}});
  if (!is_lr_tableau(t, r)) throw InvalidInput("iota: input is not an LR tableau for the pair");
  const auto& target = two_rect_lrt(t.shape(), {eta1 - 1, k}, {eta2 + 1, k});
  if (!target) throw ConsistencyError("iota: target LR tableau is missing");
  return *target;
}

Word embed_step(const Word& w, const RectSeq& r, const ElementaryStep& step) {
  if (step.kind == ElementaryStep::Kind::E2) return tau_unchecked(w, r, step.position);
  const Interval b = step.b > 0 ? pair_block(r, step.position) : r.subalphabet(step.position);
  const Partition shape = insertion_tableau(local_word(w, b)).shape();
  const auto& target = two_rect_lrt(shape, {step.a - 1, step.k}, {step.b + 1, step.k});
  if (!target) throw ConsistencyError("embedding step: target LR tableau is missing");
  return replace_block(w, b, *target);
}

Word theta_along(const Word& w, const RectSeq& r, const std::vector<ElementaryStep>& chain) {
  Word cur = w;
  RectSeq seq = r;
  for (const auto& st : chain) {
    cur = embed_step(cur, seq, st);
    seq = apply_step(seq, st);
  }
  return cur;
}

Word theta(const Word& w, const RectSeq& r, const RectSeq& s, ChainStrategy strategy) {
  if (!is_lr_word(w, r)) throw InvalidInput("theta: word is not an LR word for the source sequence");
  return theta_along(w, r, chain_between(r, s, strategy));
}

Tableau theta(const Tableau& t, const RectSeq& r, const RectSeq& s, ChainStrategy strategy) {
  return insertion_tableau(theta(row_word(t), r, s, strategy));
}

Tableau theta_rows(const Tableau& t, const RectSeq& r) { return theta(t, r, r.rows_seq()); }

std::vector<Tableau> theta_image(const RectSeq& r) {
  const RectSeq rows = r.rows_seq();
  const auto chain = chain_between(r, rows);
  std::vector<Tableau> out;
  for (const auto& t : enumerate_lrt_all(r)) out.push_back(insertion_tableau(theta_along(row_word(t), r, chain)));
  std::sort(out.begin(), out.end());
  return out;
}

bool theta_image_contains(const Tableau& s, const RectSeq& r) {
  const int n = r.alphabet_size();
  const auto gamma = r.gamma();
  if (!s.is_straight() || s.max_letter() > n || s.content(n) != gamma)
    throw InvalidInput("image test: content of the tableau differs from gamma(R)");
  const Word w = row_word(s);
  const auto xi = r.xi();
  for (int k = 1; k <= static_cast<int>(xi.size()); ++k) {
    if (xi[k - 1].empty()) continue;
    // minimal permutation bringing the width-k subalphabets to the front, in order
    std::vector<int> perm(n);
    int front = 0;
    for (int i = 0; i < r.count(); ++i)
      if (r[i].cols == k)
        for (Letter x = r.subalphabet(i).lo; x <= r.subalphabet(i).hi; ++x) perm[x - 1] = ++front;
    int back = front;
    for (int i = 0; i < r.count(); ++i)
      if (r[i].cols != k)
        for (Letter x = r.subalphabet(i).lo; x <= r.subalphabet(i).hi; ++x) perm[x - 1] = ++back;
    const Word moved = restrict(permutation_action(w, perm), Interval{1, front});
    const auto ct = ctype(insertion_tableau(moved)).xi;
    const Partition got = k - 1 < static_cast<int>(ct.size()) ? ct[k - 1] : Partition();
    if (!dominance_leq(xi[k - 1], got)) return false;
  }
  return true;
}

std::vector<RectSeq> sequences_with_gamma(const std::vector<int>& gamma) {
  // runs of equal values, each split by a composition of its length
  std::vector<std::pair<int, int>> runs;  // (value, length)
  for (int g : gamma) {
    if (g <= 0) throw InvalidInput("gamma entries must be positive");
    if (!runs.empty() && runs.back().first == g) ++runs.back().second;
    else runs.emplace_back(g, 1);
  }
  std::vector<RectSeq> out;
  std::vector<Rectangle> cur;
  auto rec = [&](auto&& self, std::size_t run, int left) -> void {
    if (run == runs.size()) {
      out.emplace_back(cur);
      return;
    }
    if (left == 0) {
      self(self, run + 1, run + 1 < runs.size() ? runs[run + 1].second : 0);
      return;
    }
    for (int h = 1; h <= left; ++h) {
      cur.push_back({h, runs[run].first});
      self(self, run, left - h);
      cur.pop_back();
    }
  };
  rec(rec, 0, runs.empty() ? 0 : runs[0].second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RectSeq> dominant_sequences_with_gamma(const Partition& gamma) {
  std::vector<RectSeq> out;
  for (auto& r : sequences_with_gamma(gamma.parts())) {
    bool heights_dec = true;
    for (int i = 1; i < r.count(); ++i)
      if (r[i].cols == r[i - 1].cols && r[i].rows > r[i - 1].rows) heights_dec = false;
    if (heights_dec) out.push_back(r);
  }
  return out;
}

std::vector<Tableau> matom(const RectSeq& r, int max_cells) {
  if (r.total_cells() > max_cells) throw InvalidInput("matom: sequence exceeds the cell bound");
  const auto img = theta_image(r);
  // images only grow going down the order, so subtract the strictly larger classes
  std::set<Tableau> higher;
  for (const auto& rp : dominant_sequences_with_gamma(Partition(r.gamma()))) {
    if (!pseudo_geq(rp, r) || pseudo_geq(r, rp)) continue;
    for (auto& t : theta_image(rp)) higher.insert(std::move(t));
  }
  std::vector<Tableau> out;
  for (const auto& t : img)
    if (!higher.count(t)) out.push_back(t);
  return out;
}

}  // namespace gkostka
