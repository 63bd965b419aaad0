#include "gkostka/charge.hpp"

#include <algorithm>

#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"

namespace gkostka {

namespace {

std::pair<int, int> d_both(const Partition& shape, Rectangle r1, Rectangle r2) {
  const int a = std::max(r1.cols, r2.cols);
  const int b = std::max(r1.rows, r2.rows);
  int d = 0, dt = 0;
  for (int i = 0; i < shape.length(); ++i) {
    d += std::max(0, shape[i] - a);
    if (i >= b) dt += shape[i];
  }
  if (d + dt != intersection_size(r1, r2)) throw ConsistencyError("d + d~ differs from the intersection size");
  return {d, dt};
}

void require_pair_word(const Word& w, Rectangle r1, Rectangle r2) {
  if (!is_lr_word(w, RectSeq({r1, r2}))) throw InvalidInput("not an LR word for the rectangle pair");
}

}  // namespace

int d_pair(const Word& w, Rectangle r1, Rectangle r2) {
  require_pair_word(w, r1, r2);
  return d_both(insertion_tableau(w).shape(), r1, r2).first;
}

int dtilde_pair(const Word& w, Rectangle r1, Rectangle r2) {
  require_pair_word(w, r1, r2);
  return d_both(insertion_tableau(w).shape(), r1, r2).second;
}

ChargePair charge_pair(const Word& w, const RectSeq& r) {
  if (!is_lr_word(w, r)) throw InvalidInput("charge: word is not an LR word for the sequence");
  const int t = r.count();
  if (t <= 1) return {};
  long long sc = 0, sd = 0;
  const auto orb = orbit(w, r);
  for (const auto& el : orb) {
    for (int i = 0; i + 1 < t; ++i) {
      const Interval b{el.seq.subalphabet(i).lo, el.seq.subalphabet(i + 1).hi};
      const Partition shape = insertion_tableau(local_word(el.word, b)).shape();
      auto [d, dt] = d_both(shape, el.seq[i], el.seq[i + 1]);
      sc += static_cast<long long>(t - 1 - i) * d;
      sd += static_cast<long long>(t - 1 - i) * dt;
    }
  }
  const auto m = static_cast<long long>(orb.size());
  if (sc % m != 0 || sd % m != 0) throw ConsistencyError("charge: orbit sum is not divisible by the orbit size");
  return {static_cast<int>(sc / m), static_cast<int>(sd / m)};
}

int charge_R(const Word& w, const RectSeq& r) { return charge_pair(w, r).charge; }
int cocharge_R(const Word& w, const RectSeq& r) { return charge_pair(w, r).cocharge; }
int charge_R(const Tableau& t, const RectSeq& r) { return charge_R(row_word(t), r); }
int cocharge_R(const Tableau& t, const RectSeq& r) { return cocharge_R(row_word(t), r); }

int ls_charge(const Word& w) {
  const int n = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  if (!w.empty() && *std::min_element(w.begin(), w.end()) < 1) throw InvalidInput("ls_charge: letters must be positive");
  auto cnt = word_content(w, n);
  for (int x = 1; x < n; ++x)
    if (cnt[x] > cnt[x - 1]) throw InvalidInput("ls_charge: content is not a partition");
  std::vector<bool> used(w.size(), false);
  const int len = static_cast<int>(w.size());
  int total = 0;
  int remaining = len;
  while (remaining > 0) {
    int top = 0;
    while (top < n && cnt[top] > 0) ++top;
    // scan leftwards cyclically for 1, 2, ..., top
    int pos = len;  // start just right of the end
    int index = 0;
    for (Letter x = 1; x <= top; ++x) {
      bool wrapped = false;
      int p = pos;
      for (int steps = 0;; ++steps) {
        --p;
        if (p < 0) {
          p = len - 1;
          wrapped = true;
        }
        if (!used[p] && w[p] == x) break;
      }
      if (x > 1 && wrapped) ++index;
      total += index;
      used[p] = true;
      pos = p;
      --cnt[x - 1];
      --remaining;
    }
  }
  return total;
}

int ls_cocharge(const Word& w) {
  const int n = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  const auto cnt = word_content(w, n);
  int nm = 0;
  for (int i = 0; i < n; ++i) nm += i * cnt[i];
  return nm - ls_charge(w);
}

int n_stat(const RectSeq& r) {
  int total = 0;
  for (int i = 1; i <= r.max_rows(); ++i)
    for (int j = 1; j <= r.max_cols(); ++j) {
      int c = 0;
      for (const auto& rect : r.rects())
        if (rect.rows >= i && rect.cols >= j) ++c;
      total += c * (c - 1) / 2;
    }
  return total;
}

}  // namespace gkostka
