#include "gkostka/catabolism.hpp"

#include <algorithm>

#include "gkostka/rsk.hpp"

namespace gkostka {

namespace {

// Row word of the cells of s selected by keep(row, col), 1-based coordinates.
template <class Pred>
Word part_word(const Tableau& s, Pred keep) {
  Word w;
  for (int i = s.num_rows() - 1; i >= 0; --i) {
    const auto& row = s.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (keep(i + 1, s.inner()[i] + static_cast<int>(j) + 1)) w.push_back(row[j]);
  }
  return w;
}

}  // namespace

Tableau slice(const Tableau& s, SliceMode mode, int at) {
  Word first, second;
  if (mode == SliceMode::Row) {
    first = part_word(s, [at](int r, int) { return r <= at; });
    second = part_word(s, [at](int r, int) { return r > at; });
  } else {
    first = part_word(s, [at](int, int c) { return c > at; });
    second = part_word(s, [at](int, int c) { return c <= at; });
  }
  first.insert(first.end(), second.begin(), second.end());
  return insertion_tableau(first);
}

Tableau remove_key(const Tableau& s, Rectangle r1, Letter base) {
  const Interval a{base + 1, base + r1.rows};
  if (!s.is_straight() || restrict(s, a) != key_rect(r1.cols, r1.rows, a))
    throw InvalidInput("remove_key: the tableau does not contain the key of the first rectangle");
  std::vector<std::vector<Letter>> rows = s.rows();
  for (int i = 0; i < r1.rows; ++i) rows[i].erase(rows[i].begin(), rows[i].begin() + r1.cols);
  return Tableau::unchecked(Partition(std::vector<int>(r1.rows, r1.cols)), std::move(rows));
}

Tableau cat_step(const Tableau& s, Rectangle r1, SliceMode mode, Letter base) {
  return slice(remove_key(s, r1, base), mode, mode == SliceMode::Row ? r1.rows : r1.cols);
}

CatTrace catabolize(const Tableau& s, const RectSeq& r, SliceMode mode) {
  CatTrace tr;
  const int n = r.alphabet_size();
  if (!s.is_straight() || s.max_letter() > n || s.content(n) != r.gamma()) return tr;
  Tableau cur = s;
  Letter base = 0;
  for (int i = 0; i < r.count(); ++i) {
    const Interval a{base + 1, base + r[i].rows};
    if (restrict(cur, a) != key_rect(r[i].cols, r[i].rows, a)) return tr;
    cur = cat_step(cur, r[i], mode, base);
    tr.steps.push_back({std::string(mode == SliceMode::Row ? "cat " : "colcat ") + std::to_string(r[i].rows) + "x" +
                            std::to_string(r[i].cols),
                        cur});
    base = a.hi;
  }
  tr.verdict = cur.empty();
  return tr;
}

int y_k(const Tableau& s, int k, Letter base) {
  int j = 0;
  for (;;) {
    const Interval a{base + 1, base + j + 1};
    if (restrict(s, a) != key_rect(k, j + 1, a)) return j;
    ++j;
  }
}

CTypeStat ctype(const Tableau& s) {
  if (!s.is_straight()) throw InvalidInput("ctype needs a straight-shape tableau");
  CTypeStat out;
  const Letter top = s.max_letter();
  const auto content = s.content(top);
  Letter base = 0;
  while (base < top && content[base] == 0) ++base;
  for (Letter x = base + 1; x < top; ++x)
    if (content[x] > content[x - 1]) throw InvalidInput("ctype: content is not a partition");
  if (top > 0) out.xi.resize(content[base]);

  Tableau cur = s;
  while (!cur.empty()) {
    const int k = content[base];
    int m = 0;
    while (base + m < top && content[base + m] == k) ++m;
    std::vector<int> ys{y_k(cur, k, base)};
    Tableau t = cur;
    for (int guard = 0;; ++guard) {
      if (guard > s.num_cells() + 1) throw ConsistencyError("ctype: V_k iteration does not stabilize");
      Tableau next = slice(t, SliceMode::Col, k);
      if (next == t) break;
      t = std::move(next);
      ys.push_back(y_k(t, k, base));
    }
    if (ys.back() != m) throw ConsistencyError("ctype: stable tableau does not start with the full key");
    std::vector<int> parts{ys[0]};
    for (std::size_t j = 1; j < ys.size(); ++j) parts.push_back(ys[j] - ys[j - 1]);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t j = 1; j < parts.size(); ++j)
      if (parts[j] > parts[j - 1] || parts[j] <= 0) throw ConsistencyError("ctype: multi-type entry is not a partition");
    out.xi[k - 1] = Partition(parts);
    out.stable.push_back(t);
    base += m;
    cur = insertion_tableau(row_word(restrict(t, Interval{base + 1, top})));
  }
  return out;
}

bool ctype_dominates(const Tableau& s, const RectSeq& r) {
  const int n = r.alphabet_size();
  if (!s.is_straight() || s.max_letter() > n || s.content(n) != r.gamma())
    throw InvalidInput("ctype_dominates: content of the tableau differs from gamma(R)");
  const auto a = ctype(s).xi;
  const auto b = r.xi();
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const Partition pa = k < a.size() ? a[k] : Partition();
    const Partition pb = k < b.size() ? b[k] : Partition();
    if (!dominance_leq(pb, pa)) return false;
  }
  return true;
}

std::string to_string(const XiStat& xi) {
  std::string s;
  for (std::size_t k = 0; k < xi.size(); ++k) s += (k ? "; " : "") + to_string(xi[k]);
  return s;
}

XiStat trimmed(XiStat xi) {
  while (!xi.empty() && xi.back().empty()) xi.pop_back();
  return xi;
}

}  // namespace gkostka
