#include "gkostka/lrwords.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "gkostka/rsk.hpp"

namespace gkostka {

RectSeq::RectSeq(std::vector<Rectangle> rects) : rects_(std::move(rects)) {
  for (const auto& r : rects_)
    if (r.rows < 0 || r.cols < 1) throw InvalidInput("rectangles need positive dimensions");
}

int RectSeq::alphabet_size() const noexcept {
  int n = 0;
  for (const auto& r : rects_) n += r.rows;
  return n;
}

int RectSeq::total_cells() const noexcept {
  int n = 0;
  for (const auto& r : rects_) n += r.cells();
  return n;
}

Interval RectSeq::subalphabet(std::size_t i) const {
  int lo = 1;
  for (std::size_t j = 0; j < i; ++j) lo += rects_[j].rows;
  return {lo, lo + rects_.at(i).rows - 1};
}

int RectSeq::block_of(Letter x) const {
  int hi = 0;
  for (std::size_t j = 0; j < rects_.size(); ++j) {
    hi += rects_[j].rows;
    if (x <= hi) return static_cast<int>(j);
  }
  throw InvalidInput("letter outside the alphabet of the rectangle sequence");
}

int RectSeq::max_cols() const noexcept {
  int m = 0;
  for (const auto& r : rects_) m = std::max(m, r.cols);
  return m;
}

int RectSeq::max_rows() const noexcept {
  int m = 0;
  for (const auto& r : rects_) m = std::max(m, r.rows);
  return m;
}

std::vector<int> RectSeq::gamma() const {
  std::vector<int> g;
  for (const auto& r : rects_) g.insert(g.end(), r.rows, r.cols);
  return g;
}

XiStat RectSeq::xi() const {
  XiStat xi(max_cols());
  for (int k = 1; k <= max_cols(); ++k) {
    std::vector<int> heights;
    for (const auto& r : rects_)
      if (r.cols == k && r.rows > 0) heights.push_back(r.rows);
    std::sort(heights.rbegin(), heights.rend());
    xi[k - 1] = Partition(std::move(heights));
  }
  return xi;
}

RectSeq RectSeq::rows_seq() const {
  std::vector<Rectangle> out;
  for (const auto& r : rects_)
    for (int i = 0; i < r.rows; ++i) out.push_back({1, r.cols});
  return RectSeq(std::move(out));
}

RectSeq RectSeq::transposed() const {
  std::vector<Rectangle> out;
  for (const auto& r : rects_) out.push_back(r.transposed());
  return RectSeq(std::move(out));
}

namespace {

bool dominant_before(const Rectangle& a, const Rectangle& b) {
  return a.cols != b.cols ? a.cols > b.cols : a.rows > b.rows;
}

}  // namespace

RectSeq RectSeq::dominant_form() const {
  auto out = rects_;
  std::stable_sort(out.begin(), out.end(), dominant_before);
  return RectSeq(std::move(out));
}

bool RectSeq::is_dominant() const noexcept {
  for (std::size_t i = 1; i < rects_.size(); ++i)
    if (rects_[i].cols > rects_[i - 1].cols) return false;
  return true;
}

bool RectSeq::is_nested() const noexcept {
  for (std::size_t i = 1; i < rects_.size(); ++i)
    if (rects_[i].cols > rects_[i - 1].cols || rects_[i].rows > rects_[i - 1].rows) return false;
  return true;
}

bool RectSeq::is_rows() const noexcept {
  return std::all_of(rects_.begin(), rects_.end(), [](const Rectangle& r) { return r.rows == 1; });
}

Tableau RectSeq::key(std::size_t i) const {
  return key_rect(rects_.at(i).cols, rects_.at(i).rows, subalphabet(i));
}

RectSeq parse_rectseq(std::string_view text) {
  std::vector<Rectangle> rects;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("empty rectangle in '" + std::string(text) + "'");
    tok = tok.substr(b, e - b + 1);
    auto x = tok.find('x');
    if (x == std::string::npos) throw InvalidInput("rectangle '" + tok + "' is not of the form ROWSxCOLS");
    Rectangle r{};
    auto parse = [&](std::string_view s, int& v) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || v < 1)
        throw InvalidInput("rectangle '" + tok + "' is not of the form ROWSxCOLS");
    };
    parse(std::string_view(tok).substr(0, x), r.rows);
    parse(std::string_view(tok).substr(x + 1), r.cols);
    rects.push_back(r);
  }
  return RectSeq(std::move(rects));
}

std::string to_string(const RectSeq& r) {
  std::string s;
  for (int i = 0; i < r.count(); ++i)
    s += (i ? "," : "") + std::to_string(r[i].rows) + "x" + std::to_string(r[i].cols);
  return s;
}

SeqInvariants seq_invariants(const RectSeq& r) {
  return {r.gamma(), r.xi(), r.rows_seq(), r.transposed(), r.alphabet_size()};
}

Tableau key_rect(int k, int m, Interval a) {
  if (a.size() < m) throw InvalidInput("key_rect: alphabet smaller than the number of rows");
  std::vector<std::vector<Letter>> rows;
  for (int i = 0; i < m; ++i) rows.emplace_back(k, a.lo + i);
  return Tableau::unchecked(Partition(), std::move(rows));
}

bool is_lr_word(const Word& w, const RectSeq& r) {
  const int n = r.alphabet_size();
  std::vector<int> content(n + 1, 0);
  for (Letter x : w) {
    if (x < 1 || x > n) return false;
    ++content[x];
  }
  for (int i = 0; i < r.count(); ++i) {
    const Interval a = r.subalphabet(i);
    for (Letter x = a.lo; x <= a.hi; ++x)
      if (content[x] != r[i].cols) return false;
    if (!is_lattice(w, a)) return false;
  }
  return true;
}

bool is_lr_tableau(const Tableau& t, const RectSeq& r) {
  return t.is_straight() && is_lr_word(row_word(t), r);
}

namespace {

// Fills letters 1..n by successive horizontal strips. `bound` is the target shape, or empty for
// unconstrained shape. `check` is called after letter v (1-based) has been placed and may prune.
class StripFiller {
 public:
  using Rows = std::vector<std::vector<Letter>>;
  using Check = bool (*)(const Rows&, Letter, const void*);

  StripFiller(std::optional<Partition> bound, const std::vector<int>& content, Check check, const void* ctx)
      : bound_(std::move(bound)), content_(content), check_(check), ctx_(ctx) {}

  std::vector<Tableau> run() {
    Rows rows;
    fill_letter(rows, 0);
    return std::move(out_);
  }

 private:
  int row_cap(const Rows& rows, std::size_t i, const std::vector<int>& base) const {
    // maximum length row i may reach after this strip
    int cap = i == 0 ? (1 << 20) : base[i - 1];
    if (bound_) cap = std::min(cap, (*bound_)[i]);
    (void)rows;
    return cap;
  }

  void fill_letter(Rows& rows, std::size_t v) {
    if (v == content_.size()) {
      if (!bound_ || shape_of(rows) == *bound_) out_.push_back(Tableau::unchecked(Partition(), rows));
      return;
    }
    std::vector<int> base;
    for (const auto& r : rows) base.push_back(static_cast<int>(r.size()));
    distribute(rows, v, 0, content_[v], base);
  }

  void distribute(Rows& rows, std::size_t v, std::size_t i, int remaining, const std::vector<int>& base) {
    if (remaining == 0) {
      if (check_ && !check_(rows, static_cast<Letter>(v + 1), ctx_)) return;
      fill_letter(rows, v + 1);
      return;
    }
    if (i > base.size()) return;
    if (i == base.size() && i > 0 && base[i - 1] == 0) return;
    const int cur = i < base.size() ? base[i] : 0;
    const int cap = row_cap(rows, i, base);
    const int max_add = std::min(remaining, cap - cur);
    if (max_add < 0) return;
    for (int add = max_add; add >= 0; --add) {
      if (add > 0) {
        if (i == rows.size()) rows.emplace_back();
        rows[i].insert(rows[i].end(), add, static_cast<Letter>(v + 1));
      }
      if (i + 1 <= base.size() || add == remaining) distribute(rows, v, i + 1, remaining - add, base);
      if (add > 0) {
        rows[i].resize(rows[i].size() - add);
        if (rows[i].empty() && i + 1 == rows.size() && i >= base.size()) rows.pop_back();
      }
    }
  }

  static Partition shape_of(const Rows& rows) {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
  }

  std::optional<Partition> bound_;
  const std::vector<int>& content_;
  Check check_;
  const void* ctx_;
  std::vector<Tableau> out_;
};

struct LrContext {
  const RectSeq* r;
  std::vector<int> block_end;  // block_end[x] = index of block when x is its last letter, else -1
};

bool lr_check(const StripFiller::Rows& rows, Letter v, const void* ctx) {
  const auto* c = static_cast<const LrContext*>(ctx);
  const int blk = c->block_end[v];
  if (blk < 0) return true;
  Word w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return is_lattice(w, c->r->subalphabet(blk));
}

void sort_lex(std::vector<Tableau>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Tableau& a, const Tableau& b) { return a.rows() < b.rows(); });
}

std::vector<Tableau> lrt_impl(std::optional<Partition> shape, const RectSeq& r) {
  LrContext ctx{&r, std::vector<int>(r.alphabet_size() + 1, -1)};
  for (int i = 0; i < r.count(); ++i)
    if (r[i].rows > 0) ctx.block_end[r.subalphabet(i).hi] = i;
  const auto gamma = r.gamma();
  StripFiller f(std::move(shape), gamma, &lr_check, &ctx);
  return f.run();
}

}  // namespace

std::vector<Tableau> enumerate_cst(const Partition& shape, const std::vector<int>& content) {
  if (std::accumulate(content.begin(), content.end(), 0) != shape.size()) return {};
  StripFiller f(shape, content, nullptr, nullptr);
  auto out = f.run();
  sort_lex(out);
  return out;
}

std::vector<Tableau> enumerate_cst_all(const std::vector<int>& content) {
  StripFiller f(std::nullopt, content, nullptr, nullptr);
  auto out = f.run();
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) return a.shape() > b.shape();
    return a.rows() < b.rows();
  });
  return out;
}

std::vector<Tableau> enumerate_lrt(const Partition& shape, const RectSeq& r) {
  if (shape.size() != r.total_cells()) return {};
  auto out = lrt_impl(shape, r);
  sort_lex(out);
  return out;
}

std::vector<Tableau> enumerate_lrt_all(const RectSeq& r) {
  auto out = lrt_impl(std::nullopt, r);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) return a.shape() > b.shape();
    return a.rows() < b.rows();
  });
  return out;
}

bool pseudo_geq(const RectSeq& r, const RectSeq& s) {
  const auto xr = r.xi();
  const auto xs = s.xi();
  const std::size_t w = std::max(xr.size(), xs.size());
  for (std::size_t k = 0; k < w; ++k) {
    const Partition pr = k < xr.size() ? xr[k] : Partition();
    const Partition ps = k < xs.size() ? xs[k] : Partition();
    if (!dominance_leq(ps, pr)) return false;
  }
  return true;
}

std::string to_string(const ElementaryStep& s) {
  if (s.kind == ElementaryStep::Kind::E2) return "E2(p=" + std::to_string(s.position + 1) + ")";
  return "E1(p=" + std::to_string(s.position + 1) + ",k=" + std::to_string(s.k) + ",a=" + std::to_string(s.a) +
         ",b=" + std::to_string(s.b) + ")";
}

RectSeq apply_step(const RectSeq& r, const ElementaryStep& step) {
  auto rects = r.rects();
  const auto p = static_cast<std::size_t>(step.position);
  if (step.kind == ElementaryStep::Kind::E2) {
    if (p + 1 >= rects.size()) throw InvalidInput("E2 step position out of range");
    std::swap(rects[p], rects[p + 1]);
    return RectSeq(std::move(rects));
  }
  if (p != 0) throw InvalidInput("E1 acts on the first two rectangles only");
  if (rects.empty() || rects[p] != Rectangle{step.a, step.k} || step.a - 1 < step.b + 1)
    throw InvalidInput("E1 step does not match the sequence");
  if (step.b == 0) {
    rects[p].rows -= 1;
    rects.insert(rects.begin() + static_cast<std::ptrdiff_t>(p) + 1, Rectangle{1, step.k});
  } else {
    if (p + 1 >= rects.size() || rects[p + 1] != Rectangle{step.b, step.k})
      throw InvalidInput("E1 step does not match the sequence");
    rects[p].rows -= 1;
    rects[p + 1].rows += 1;
  }
  return RectSeq(std::move(rects));
}

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(std::vector<Rectangle> start) : cur_(std::move(start)) {}

  void swap_at(std::size_t p) {
    if (cur_[p] == cur_[p + 1]) {
      std::swap(cur_[p], cur_[p + 1]);
      return;
    }
    steps_.push_back({ElementaryStep::Kind::E2, static_cast<int>(p), 0, 0, 0});
    std::swap(cur_[p], cur_[p + 1]);
  }

  void move(std::size_t from, std::size_t to) {
    while (from > to) swap_at(--from);
    while (from < to) swap_at(from++);
  }

  void sort_dominant() {
    for (std::size_t i = 1; i < cur_.size(); ++i)
      for (std::size_t j = i; j > 0 && dominant_before(cur_[j], cur_[j - 1]); --j) swap_at(j - 1);
  }

  void split(std::size_t p, int k, int a, int b) {
    ElementaryStep st{ElementaryStep::Kind::E1, static_cast<int>(p), k, a, b};
    cur_ = apply_step(RectSeq(cur_), st).rects();
    steps_.push_back(st);
  }

  void order_as(const std::vector<Rectangle>& target) {
    for (std::size_t p = 0; p < target.size(); ++p) {
      std::size_t q = p;
      while (q < cur_.size() && cur_[q] != target[p]) ++q;
      if (q == cur_.size()) throw ConsistencyError("chain_between: multiset mismatch");
      move(q, p);
    }
  }

  std::vector<Rectangle>& cur() { return cur_; }
  std::vector<ElementaryStep> take() { return std::move(steps_); }

 private:
  std::vector<Rectangle> cur_;
  std::vector<ElementaryStep> steps_;
};

std::vector<int> heights_of(const std::vector<Rectangle>& rs, int k) {
  std::vector<int> h;
  for (const auto& r : rs)
    if (r.cols == k) h.push_back(r.rows);
  std::sort(h.rbegin(), h.rend());
  return h;
}

// All (a, b) transfers from the current heights that stay above the target in dominance.
std::vector<std::pair<int, int>> valid_transfers(const std::vector<int>& h, const Partition& target) {
  std::vector<int> parts = h;
  std::vector<int> distinct;
  for (int x : parts)
    if (distinct.empty() || distinct.back() != x) distinct.push_back(x);
  std::vector<int> lower = distinct;
  lower.push_back(0);
  std::vector<std::pair<int, int>> out;
  for (int a : distinct)
    for (int b : lower) {
      if (a < b + 2) continue;
      std::vector<int> nh = parts;
      *std::find(nh.begin(), nh.end(), a) -= 1;
      if (b == 0) nh.push_back(1);
      else *std::find(nh.begin(), nh.end(), b) += 1;
      std::sort(nh.rbegin(), nh.rend());
      if (dominance_leq(target, Partition(nh))) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace

std::vector<ElementaryStep> chain_between(const RectSeq& r, const RectSeq& s, ChainStrategy strategy) {
  if (!pseudo_geq(r, s)) throw InvalidInput("chain_between: sequences are not comparable");
  ChainBuilder cb(r.rects());
  const auto xs = s.xi();
  if (strategy == ChainStrategy::Canonical) cb.sort_dominant();
  std::vector<int> widths;
  for (const auto& rect : r.rects()) widths.push_back(rect.cols);
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  if (strategy == ChainStrategy::Canonical) std::reverse(widths.begin(), widths.end());

  for (int k : widths) {
    const Partition target = static_cast<std::size_t>(k - 1) < xs.size() ? xs[k - 1] : Partition();
    for (;;) {
      auto h = heights_of(cb.cur(), k);
      if (Partition(h) == target) break;
      auto moves = valid_transfers(h, target);
      if (moves.empty()) throw ConsistencyError("chain_between: no dominance step available");
      auto [a, b] = strategy == ChainStrategy::Canonical ? moves.front() : moves.back();
      auto& cur = cb.cur();
      if (strategy == ChainStrategy::Canonical) {
        std::size_t i = 0;
        for (std::size_t q = 0; q < cur.size(); ++q)
          if (cur[q] == Rectangle{a, k}) i = q;
        cb.move(i, 0);
        if (b > 0) {
          std::size_t j = i + 1;
          while (cb.cur()[j] != Rectangle{b, k}) ++j;
          cb.move(j, 1);
        }
        cb.split(0, k, a, b);
        cb.sort_dominant();
      } else {
        std::size_t i = 0;
        while (cur[i] != Rectangle{a, k}) ++i;
        cb.move(i, 0);
        if (b > 0) {
          std::size_t j = 1;
          while (cb.cur()[j] != Rectangle{b, k}) ++j;
          cb.move(j, 1);
        }
        cb.split(0, k, a, b);
      }
    }
  }
  cb.order_as(s.rects());
  return cb.take();
}

}  // namespace gkostka
