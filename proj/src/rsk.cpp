#include "gkostka/rsk.hpp"

#include <algorithm>

namespace gkostka {

namespace {

using Rows = std::vector<std::vector<Letter>>;

// Row insertion on raw rows; returns the 0-based (row, col) of the new cell.
std::pair<int, int> insert_rows(Rows& rows, Letter x) {
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(i), 0};
    }
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(i), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

Letter reverse_insert_rows(Rows& rows, int r, int c) {
  Letter y = rows[r][c];
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + r);
  for (int i = r - 1; i >= 0; --i) {
    auto& row = rows[i];
    // largest entry strictly smaller than y
    auto it = std::lower_bound(row.begin(), row.end(), y);
    --it;
    std::swap(*it, y);
  }
  return y;
}

void require_straight(const Tableau& t) {
  if (!t.is_straight()) throw InvalidInput("operation needs a straight-shape tableau");
}

void require_standard(const Tableau& q) {
  require_straight(q);
  if (!q.is_standard()) throw InvalidInput("operation needs a standard tableau");
}

}  // namespace

std::pair<Tableau, Cell> row_insert(const Tableau& t, Letter x) {
  require_straight(t);
  Rows rows = t.rows();
  auto [r, c] = insert_rows(rows, x);
  return {Tableau::unchecked(Partition(), std::move(rows)), Cell{r + 1, c + 1}};
}

std::pair<Tableau, Cell> column_insert(const Tableau& t, Letter x) {
  require_straight(t);
  Rows rows = t.rows();
  for (int c = 0;; ++c) {
    // column c as the entries rows[i][c] for rows long enough
    int height = 0;
    while (height < static_cast<int>(rows.size()) && static_cast<int>(rows[height].size()) > c) ++height;
    int pos = height;
    for (int i = 0; i < height; ++i)
      if (rows[i][c] >= x) {
        pos = i;
        break;
      }
    if (pos == height) {
      if (pos == static_cast<int>(rows.size())) rows.emplace_back();
      rows[pos].push_back(x);
      return {Tableau::unchecked(Partition(), std::move(rows)), Cell{pos + 1, c + 1}};
    }
    std::swap(rows[pos][c], x);
  }
}

std::pair<Tableau, Letter> reverse_row_insert(const Tableau& t, Cell corner) {
  require_straight(t);
  const Partition sh = t.shape();
  if (corner.row < 1 || corner.row > sh.length() || sh[corner.row - 1] != corner.col ||
      sh[corner.row] >= corner.col)
    throw InvalidInput("reverse insertion needs an outer corner");
  Rows rows = t.rows();
  Letter y = reverse_insert_rows(rows, corner.row - 1, corner.col - 1);
  return {Tableau::unchecked(Partition(), std::move(rows)), y};
}

std::pair<Letter, Tableau> reverse_column_insert(const Tableau& t, Cell corner) {
  require_straight(t);
  const Partition sh = t.shape();
  if (corner.row < 1 || corner.row > sh.length() || sh[corner.row - 1] != corner.col ||
      sh[corner.row] >= corner.col)
    throw InvalidInput("reverse insertion needs an outer corner");
  Rows rows = t.rows();
  Letter y = rows[corner.row - 1][corner.col - 1];
  rows[corner.row - 1].pop_back();
  if (rows[corner.row - 1].empty()) rows.pop_back();
  for (int c = corner.col - 2; c >= 0; --c) {
    // largest entry <= y in column c
    int pos = -1;
    for (int i = 0; i < static_cast<int>(rows.size()) && static_cast<int>(rows[i].size()) > c; ++i)
      if (rows[i][c] <= y) pos = i;
    std::swap(rows[pos][c], y);
  }
  return {y, Tableau::unchecked(Partition(), std::move(rows))};
}

std::vector<Cell> corners(const Partition& shape) {
  std::vector<Cell> out;
  for (int i = 0; i < shape.length(); ++i)
    if (shape[i + 1] < shape[i]) out.push_back({i + 1, shape[i]});
  return out;
}

Tableau insertion_tableau(const Word& w) {
  Rows rows;
  for (Letter x : w) insert_rows(rows, x);
  return Tableau::unchecked(Partition(), std::move(rows));
}

RSKPair rsk(const Word& w) {
  Rows p, q;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto [r, c] = insert_rows(p, w[k]);
    if (r == static_cast<int>(q.size())) q.emplace_back();
    q[r].push_back(static_cast<Letter>(k + 1));
  }
  return {Tableau::unchecked(Partition(), std::move(p)), Tableau::unchecked(Partition(), std::move(q))};
}

Word inverse_rsk(const Tableau& p, const Tableau& q) {
  require_straight(p);
  require_straight(q);
  if (p.shape() != q.shape()) throw InvalidInput("inverse_rsk: P and Q shapes differ");
  if (!q.is_standard()) throw InvalidInput("inverse_rsk: Q is not standard");
  const int n = q.num_cells();
  // locate each entry of q
  std::vector<std::pair<int, int>> where(n + 1);
  for (int i = 0; i < q.num_rows(); ++i)
    for (int j = 0; j < static_cast<int>(q.rows()[i].size()); ++j) where[q.rows()[i][j]] = {i, j};
  Rows rows = p.rows();
  Word w(n);
  for (int k = n; k >= 1; --k) w[k - 1] = reverse_insert_rows(rows, where[k].first, where[k].second);
  return w;
}

Word inverse_rsk(const RSKPair& pair) { return inverse_rsk(pair.p, pair.q); }

bool knuth_equivalent(const Word& v, const Word& w) { return insertion_tableau(v) == insertion_tableau(w); }

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word reverse_complement(const Word& w, int n) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = n + 1 - x;
  return out;
}

Tableau evacuation(const Tableau& q) {
  require_standard(q);
  return insertion_tableau(reverse_complement(row_word(q), q.num_cells()));
}

Tableau promotion(const Tableau& q) {
  require_standard(q);
  Rows rows = q.rows();
  const int n = q.num_cells();
  if (n == 0) return q;
  int r = 0, c = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
      if (rows[i][j] == n) r = i, c = j;
  for (;;) {
    const bool has_left = c > 0;
    const bool has_above = r > 0;
    if (!has_left && !has_above) break;
    if (has_left && (!has_above || rows[r][c - 1] > rows[r - 1][c])) {
      rows[r][c] = rows[r][c - 1];
      --c;
    } else {
      rows[r][c] = rows[r - 1][c];
      --r;
    }
  }
  rows[0][0] = 0;
  for (auto& row : rows)
    for (Letter& x : row) ++x;
  return Tableau::unchecked(Partition(), std::move(rows));
}

Tableau promotion_inverse(const Tableau& q) {
  require_standard(q);
  Rows rows = q.rows();
  const int n = q.num_cells();
  if (n == 0) return q;
  int r = 0, c = 0;  // hole
  for (;;) {
    const bool has_right = c + 1 < static_cast<int>(rows[r].size());
    const bool has_below = r + 1 < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r + 1].size());
    if (!has_right && !has_below) break;
    if (has_right && (!has_below || rows[r][c + 1] < rows[r + 1][c])) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r][c] = n + 1;
  for (auto& row : rows)
    for (Letter& x : row) --x;
  return Tableau::unchecked(Partition(), std::move(rows));
}

Word crystal_reflection(const Word& w, Letter r) {
  // Bracket each r+1 with the nearest free r to its right.
  std::vector<std::size_t> open;  // unmatched r+1 positions
  std::vector<std::size_t> free_r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == r + 1) {
      open.push_back(i);
    } else if (w[i] == r) {
      if (!open.empty()) open.pop_back();
      else free_r.push_back(i);
    }
  }
  // Unmatched subword is r^a (r+1)^b at positions free_r ++ open.
  const std::size_t a = free_r.size(), b = open.size();
  if (a == b) return w;
  Word out = w;
  std::vector<std::size_t> pos = free_r;
  pos.insert(pos.end(), open.begin(), open.end());
  for (std::size_t k = 0; k < pos.size(); ++k) out[pos[k]] = k < b ? r : r + 1;
  return out;
}

Word w0_action(const Word& w, Interval b) {
  Word out = w;
  const int m = b.size();
  for (int k = 1; k < m; ++k)
    for (int j = k; j >= 1; --j) out = crystal_reflection(out, b.lo + j - 1);
  return out;
}

Word permutation_action(const Word& w, const std::vector<int>& perm) {
  std::vector<int> sigma = perm;
  Word out = w;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < sigma.size() && sigma[i] < sigma[i + 1]) ++i;
    if (i + 1 >= sigma.size()) break;
    out = crystal_reflection(out, static_cast<Letter>(i + 1));
    std::swap(sigma[i], sigma[i + 1]);
  }
  return out;
}

bool is_lattice(const Word& w, Interval b) {
  if (b.size() <= 1) return true;
  std::vector<int> count(b.size(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!b.contains(*it)) continue;
    const int k = *it - b.lo;
    ++count[k];
    if (k > 0 && count[k] > count[k - 1]) return false;
  }
  return true;
}

}  // namespace gkostka
