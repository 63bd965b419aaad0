#include "gkostka/transpose.hpp"

#include <algorithm>
#include <map>

#include "gkostka/cyclage.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"

namespace gkostka {

Word tr_word(const Word& w, const RectSeq& r) {
  if (!is_lr_word(w, r)) throw InvalidInput("tr_R: word is not an LR word for the sequence");
  const RectSeq rt = r.transposed();
  std::vector<int> seen(r.alphabet_size() + 1, 0);
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    const int i = r.block_of(x);
    out.push_back(rt.subalphabet(i).lo + seen[x]++);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Tableau tr_tab(const Tableau& t, const RectSeq& r) {
  if (!is_lr_tableau(t, r)) throw InvalidInput("tr_R: tableau is not an LR tableau for the sequence");
  return insertion_tableau(tr_word(row_word(t), r));
}

Tableau rowwise_tableau(const Partition& shape, Letter base) {
  std::vector<std::vector<Letter>> rows;
  Letter next = base;
  for (int p : shape.parts()) {
    rows.emplace_back();
    for (int j = 0; j < p; ++j) rows.back().push_back(++next);
  }
  return Tableau::unchecked(Partition(), std::move(rows));
}

Tableau columnwise_tableau(const Partition& shape, Letter base) {
  const Partition c = conjugate(shape);
  std::vector<std::vector<Letter>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].resize(shape[i]);
  Letter next = base;
  for (int j = 0; j < c.length(); ++j)
    for (int i = 0; i < c[j]; ++i) rows[i][j] = ++next;
  return Tableau::unchecked(Partition(), std::move(rows));
}

AnchorTableaux key_anchors(const RectSeq& r) {
  AnchorTableaux a;
  for (int i = 0; i < r.count(); ++i) {
    a.blocks.push_back(r.subalphabet(i));
    a.z.push_back(r.key(i));
  }
  return a;
}

namespace {

template <class Make>
AnchorTableaux standard_anchors(const RectSeq& r, Make make) {
  AnchorTableaux a;
  Letter base = 0;
  for (int i = 0; i < r.count(); ++i) {
    a.blocks.push_back({base + 1, base + r[i].cells()});
    a.z.push_back(make(r[i].partition(), base));
    base += r[i].cells();
  }
  return a;
}

}  // namespace

AnchorTableaux rowwise_anchors(const RectSeq& r) { return standard_anchors(r, rowwise_tableau); }
AnchorTableaux columnwise_anchors(const RectSeq& r) { return standard_anchors(r, columnwise_tableau); }

bool in_anchor_set(const Word& w, const AnchorTableaux& a) {
  for (Letter x : w)
    if (std::none_of(a.blocks.begin(), a.blocks.end(), [x](const Interval& b) { return b.contains(x); }))
      return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    if (insertion_tableau(restrict(w, a.blocks[i])) != a.z[i]) return false;
  return true;
}

Word std_general(const Word& w, const AnchorTableaux& from, const AnchorTableaux& to) {
  if (from.blocks.size() != to.blocks.size() || from.z.size() != to.z.size())
    throw InvalidInput("std_general: segmentations have different numbers of blocks");
  for (std::size_t i = 0; i < from.z.size(); ++i)
    if (from.z[i].shape() != to.z[i].shape()) throw InvalidInput("std_general: anchor shapes differ");
  if (!in_anchor_set(w, from)) throw InvalidInput("std_general: word does not match the source anchors");
  Word out = w;
  for (std::size_t i = 0; i < from.blocks.size(); ++i) {
    const Interval b = from.blocks[i];
    const Word nw = inverse_rsk(to.z[i], rsk(restrict(w, b)).q);
    std::size_t k = 0;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (b.contains(w[p])) out[p] = nw[k++];
  }
  return out;
}

Word std_word(const Word& w) {
  std::vector<std::size_t> idx(w.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<Letter>(r + 1);
  return out;
}

Word cstd(const Word& w, const RectSeq& r) { return std_general(w, key_anchors(r), columnwise_anchors(r)); }

bool std_image_check(const Word& v, const std::vector<int>& alpha) {
  const int n = static_cast<int>(v.size());
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (v[i] < 1 || v[i] > n || pos[v[i]] >= 0) throw InvalidInput("std_image_check: word is not standard");
    pos[v[i]] = i;
  }
  std::vector<bool> partial(n + 1, false);
  int s = 0;
  for (int a : alpha) {
    s += a;
    if (s <= n) partial[s] = true;
  }
  if (s != n) return false;
  for (int i = 1; i < n; ++i)
    if (pos[i + 1] < pos[i] && !partial[i]) return false;
  return true;
}

std::vector<Word> enumerate_lr_words(const RectSeq& r) {
  std::vector<Word> out;
  std::map<Partition, std::vector<Tableau>> syt;
  const int n = r.total_cells();
  for (const auto& t : enumerate_lrt_all(r)) {
    auto& qs = syt[t.shape()];
    if (qs.empty()) qs = enumerate_cst(t.shape(), std::vector<int>(n, 1));
    for (const auto& q : qs) out.push_back(inverse_rsk(t, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PropertyReport> verify_trans_props(const RectSeq& r, int max_cells) {
  if (r.total_cells() > max_cells) throw InvalidInput("verify_trans_props: sequence exceeds the cell bound");
  const RectSeq rt = r.transposed();
  std::vector<PropertyReport> reps;
  for (const char* name : {"T1 involution", "image in W(R^t)", "T2 shape transpose", "T3 Knuth classes",
                           "T4 P commutes", "T5 Q = ev(Q)^t", "chi compatibility", "switch compatibility",
                           "rev cstd = std tr"}) {
    reps.emplace_back();
    reps.back().name = name;
  }
  std::map<Tableau, Tableau> knuth;
  for (const Word& w : enumerate_lr_words(r)) {
    const std::string ws = to_string(w);
    const Word v = tr_word(w, r);
    const RSKPair pw = rsk(w);
    const RSKPair pv = rsk(v);
    ++reps[0].checked;
    if (!is_lr_word(v, rt)) {
      reps[1].fail(ws);
      continue;
    }
    ++reps[1].checked;
    if (tr_word(v, rt) != w) reps[0].fail(ws);
    if (row_word(pw.p) == w) {
      ++reps[2].checked;
      if (col_word(pv.p) != v || pv.p.shape() != conjugate(pw.p.shape())) reps[2].fail(ws);
    }
    ++reps[3].checked;
    auto [it, fresh] = knuth.emplace(pw.p, pv.p);
    if (!fresh && it->second != pv.p) reps[3].fail(ws);
    ++reps[4].checked;
    if (pv.p != tr_tab(pw.p, r)) reps[4].fail(ws);
    ++reps[5].checked;
    if (pv.q != transpose_standard(evacuation(pw.q))) reps[5].fail(ws);
    if (!w.empty()) {
      ++reps[6].checked;
      if (tr_word(chi_R(w, r), r) != chi_R_inverse(v, rt)) reps[6].fail(ws);
    }
    for (int p = 0; p + 1 < r.count(); ++p) {
      ++reps[7].checked;
      if (tr_word(tau_p(w, r, p), swapped(r, p)) != tau_p(v, rt, p)) reps[7].fail(ws + " p=" + std::to_string(p + 1));
    }
    ++reps[8].checked;
    if (reversed(cstd(w, r)) != std_word(v)) reps[8].fail(ws);
  }
  return reps;
}

}  // namespace gkostka
