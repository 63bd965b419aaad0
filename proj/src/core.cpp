#include "gkostka/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace gkostka {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must weakly decrease");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p.parts().front(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) return false;
  int sp = 0, sq = 0;
  const int len = std::max(p.length(), q.length());
  for (int i = 0; i < len; ++i) {
    sp += p[i];
    sq += q[i];
    if (sq < sp) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, out);
  return out;
}

int n_partition(const Partition& p) {
  int s = 0;
  for (int i = 0; i < p.length(); ++i) s += i * p[i];
  return s;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<Letter>> rows) : rows_(std::move(rows)) {
  normalize();
  validate();
}

Tableau Tableau::skew(Partition inner, std::vector<std::vector<Letter>> rows) {
  Tableau t = unchecked(std::move(inner), std::move(rows));
  t.normalize();
  t.validate();
  return t;
}

Tableau Tableau::unchecked(Partition inner, std::vector<std::vector<Letter>> rows) {
  Tableau t;
  t.inner_ = std::move(inner);
  t.rows_ = std::move(rows);
  t.normalize();
  return t;
}

void Tableau::normalize() {
  // Drop trailing empty rows; trim the inner shape to the rows that remain.
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  if (inner_.length() > 0) {
    std::vector<int> in = inner_.parts();
    if (in.size() > rows_.size()) in.resize(rows_.size());
    // Leading rows that are entirely empty and fully covered by inner stay as they are;
    // an empty skew tableau collapses to the empty straight tableau.
    inner_ = rows_.empty() ? Partition() : Partition(std::move(in));
  }
}

void Tableau::validate() const {
  std::vector<int> outer_parts;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    outer_parts.push_back(inner_[i] + static_cast<int>(rows_[i].size()));
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw InvalidInput("tableau letters must be positive");
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) throw InvalidInput("tableau rows must weakly increase");
    }
  }
  for (std::size_t i = 1; i < outer_parts.size(); ++i)
    if (outer_parts[i] > outer_parts[i - 1]) throw InvalidInput("tableau outer shape is not a partition");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (inner_[i] > outer_parts[i]) throw InvalidInput("inner shape not contained in outer shape");
  }
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int col = inner_[i] + static_cast<int>(j);
      const int above = col - inner_[i - 1];
      if (above >= 0 && above < static_cast<int>(rows_[i - 1].size()) && rows_[i - 1][above] >= rows_[i][j])
        throw InvalidInput("tableau columns must strictly increase");
    }
  }
}

Partition Tableau::outer() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(inner_[i] + static_cast<int>(rows_[i].size()));
  return Partition(std::move(out));
}

int Tableau::num_cells() const noexcept {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

int Tableau::num_cols() const {
  int c = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) c = std::max(c, inner_[i] + static_cast<int>(rows_[i].size()));
  return c;
}

bool Tableau::has_cell(Cell c) const noexcept {
  if (c.row < 1 || c.row > num_rows()) return false;
  const int start = inner_[c.row - 1];
  return c.col > start && c.col <= start + static_cast<int>(rows_[c.row - 1].size());
}

Letter Tableau::at(Cell c) const {
  if (!has_cell(c)) throw std::out_of_range("cell not in tableau");
  return rows_[c.row - 1][c.col - 1 - inner_[c.row - 1]];
}

std::vector<int> Tableau::content(int n) const {
  std::vector<int> c(n, 0);
  for (const auto& r : rows_)
    for (Letter x : r) {
      if (x < 1 || x > n) throw InvalidInput("letter outside alphabet");
      ++c[x - 1];
    }
  return c;
}

Letter Tableau::max_letter() const noexcept {
  Letter m = 0;
  for (const auto& r : rows_)
    for (Letter x : r) m = std::max(m, x);
  return m;
}

bool Tableau::is_standard() const {
  const int n = num_cells();
  if (max_letter() != n) return false;
  auto c = content(n);
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 1; });
}

// ---------------------------------------------------------------------------

Word row_word(const Tableau& t) {
  Word w;
  w.reserve(t.num_cells());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Word col_word(const Tableau& t) {
  Word w;
  w.reserve(t.num_cells());
  const int cols = t.num_cols();
  for (int c = 1; c <= cols; ++c)
    for (int r = t.num_rows(); r >= 1; --r)
      if (t.has_cell({r, c})) w.push_back(t.at({r, c}));
  return w;
}

Word restrict(const Word& w, Interval b) {
  Word out;
  for (Letter x : w)
    if (b.contains(x)) out.push_back(x);
  return out;
}

Tableau restrict(const Tableau& t, Interval b) {
  // Cells holding letters below b, together with the original inner shape, form the new inner shape.
  std::vector<int> inner;
  std::vector<std::vector<Letter>> rows;
  bool straight = true;
  for (int i = 0; i < t.num_rows(); ++i) {
    int start = t.inner()[i];
    std::vector<Letter> kept;
    for (Letter x : t.rows()[i]) {
      if (x < b.lo) ++start;
      else if (x <= b.hi) kept.push_back(x);
    }
    straight = straight && start == 0;
    inner.push_back(start);
    rows.push_back(std::move(kept));
  }
  if (straight) return Tableau::unchecked(Partition(), std::move(rows));
  return Tableau::unchecked(Partition(std::move(inner)), std::move(rows));
}

bool word_fits_shape(const Word& w, const Partition& shape, Tableau* out) {
  if (static_cast<int>(w.size()) != shape.size()) return false;
  std::vector<std::vector<Letter>> rows(shape.length());
  std::size_t pos = 0;
  for (int i = shape.length() - 1; i >= 0; --i) {
    rows[i].assign(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + shape[i]));
    pos += shape[i];
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
    }
  }
  if (out) *out = Tableau::unchecked(Partition(), std::move(rows));
  return true;
}

std::vector<int> word_content(const Word& w, int n) {
  std::vector<int> c(n, 0);
  for (Letter x : w) {
    if (x < 1 || x > n) throw InvalidInput("letter outside alphabet");
    ++c[x - 1];
  }
  return c;
}

Tableau transpose_standard(const Tableau& q) {
  if (!q.is_straight()) throw InvalidInput("transpose needs a straight tableau");
  const Partition sh = conjugate(q.shape());
  std::vector<std::vector<Letter>> rows(sh.length());
  for (int i = 0; i < sh.length(); ++i)
    for (int j = 0; j < sh[i]; ++j) rows[i].push_back(q.rows()[j][i]);
  return Tableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// Text / JSON

std::string to_text(const Tableau& t) {
  std::ostringstream os;
  for (int i = 0; i < t.num_rows(); ++i) {
    bool first = true;
    for (int k = 0; k < t.inner()[i]; ++k) {
      os << (first ? "" : " ") << '.';
      first = false;
    }
    for (Letter x : t.rows()[i]) {
      os << (first ? "" : " ") << x;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Tableau tableau_from_text(std::string_view text) {
  std::vector<int> inner;
  std::vector<std::vector<Letter>> rows;
  // one-line form "1 1 2/3", optionally in brackets, as printed in counterexamples
  std::string buf(text);
  for (char& c : buf) {
    if (c == '/') c = '\n';
    else if (c == '[' || c == ']') c = ' ';
  }
  std::istringstream is{buf};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (!rows.empty()) break;  // a blank line ends the tableau
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    int skip = 0;
    std::vector<Letter> row;
    while (ls >> tok) {
      if (tok == ".") {
        if (!row.empty()) throw InvalidInput("'.' after a letter in tableau row");
        ++skip;
        continue;
      }
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw InvalidInput("bad tableau entry '" + tok + "'");
      row.push_back(v);
    }
    inner.push_back(skip);
    rows.push_back(std::move(row));
  }
  bool straight = std::all_of(inner.begin(), inner.end(), [](int v) { return v == 0; });
  try {
    if (straight) return Tableau(std::move(rows));
    return Tableau::skew(Partition(std::move(inner)), std::move(rows));
  } catch (const InvalidInput&) {
    throw;
  }
}

std::string to_json(const Tableau& t) {
  nlohmann::json j;
  j["shape"] = t.outer().parts();
  j["inner"] = t.inner().parts();
  j["rows"] = t.rows();
  return j.dump();
}

Tableau tableau_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad tableau JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows")) throw InvalidInput("tableau JSON needs a \"rows\" field");
  try {
    auto rows = j.at("rows").get<std::vector<std::vector<Letter>>>();
    std::vector<int> inner;
    if (j.contains("inner")) inner = j.at("inner").get<std::vector<int>>();
    inner.resize(rows.size(), 0);
    Tableau t = std::all_of(inner.begin(), inner.end(), [](int v) { return v == 0; })
                    ? Tableau(std::move(rows))
                    : Tableau::skew(Partition(std::move(inner)), std::move(rows));
    if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.outer().parts())
      throw InvalidInput("tableau JSON shape does not match rows");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad tableau JSON: ") + e.what());
  }
}

Tableau parse_tableau(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return tableau_from_json(text);
  return tableau_from_text(text);
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s = s.substr(1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (out.empty() && is.eof()) break;
      throw InvalidInput("empty entry in list '" + std::string(text) + "'");
    }
    tok = tok.substr(b, e - b + 1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw InvalidInput("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

Word parse_word(std::string_view text) {
  Word w = parse_int_list(text);
  for (Letter x : w)
    if (x < 1) throw InvalidInput("word letters must be positive");
  return w;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

std::size_t TableauHash::operator()(const Tableau& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : t.inner().parts()) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ULL;
  for (const auto& r : t.rows()) {
    h = (h ^ 0xffffU) * 1099511628211ULL;
    for (Letter x : r) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  }
  return h;
}

}  // namespace gkostka
