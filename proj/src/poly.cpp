#include "gkostka/poly.hpp"

#include <algorithm>
#include <set>

#include "gkostka/charge.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"
#include "json.hpp"

namespace gkostka {

QPoly QPoly::monomial(int degree, std::int64_t c) {
  QPoly p;
  p.add(degree, c);
  return p;
}

void QPoly::add(int degree, std::int64_t c) {
  if (c == 0) return;
  auto& v = terms_[degree];
  v += c;
  if (v == 0) terms_.erase(degree);
}

std::int64_t QPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::int64_t QPoly::at_one() const {
  std::int64_t s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

QPoly QPoly::reflected(int n) const {
  QPoly out;
  for (const auto& [d, c] : terms_) {
    if (d > n || d < 0) throw InvalidInput("reflection degree is smaller than the polynomial degree");
    out.add(n - d, c);
  }
  return out;
}

bool QPoly::leq(const QPoly& other) const {
  std::set<int> degs;
  for (const auto& [d, c] : terms_) degs.insert(d);
  for (const auto& [d, c] : other.terms_) degs.insert(d);
  return std::all_of(degs.begin(), degs.end(), [&](int d) { return coeff(d) <= other.coeff(d); });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [d, c] : p.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto a = c < 0 ? -c : c;
    if (d == 0) s += std::to_string(a);
    else {
      if (a != 1) s += std::to_string(a) + " ";
      s += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return s;
}

std::string to_json(const QPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int d = 0; d <= p.degree(); ++d) j.push_back(p.coeff(d));
  return j.dump();
}

QPoly kostka_poly(const Partition& shape, const RectSeq& r) {
  QPoly out;
  for (const auto& t : enumerate_lrt(shape, r)) out.add(charge_R(t, r), 1);
  return out;
}

std::map<Partition, QPoly> kostka_polys(const RectSeq& r) {
  std::map<Partition, QPoly> out;
  for (const auto& t : enumerate_lrt_all(r)) out[t.shape()].add(charge_R(t, r), 1);
  return out;
}

namespace {

using Rows = std::vector<std::vector<int>>;  // letters per row of the skew part, 0 for inner cells

// Number of LR fillings of outer/inner with content rho (rho[0] ones, rho[1] twos, ...).
class SkewLR {
 public:
  SkewLR(const Partition& inner, const Partition& bound, const Partition& rho)
      : inner_(inner), bound_(bound), rho_(rho) {}

  // Adds into `acc` the count for every reachable outer shape.
  void run(std::map<Partition, std::int64_t>& acc, std::int64_t weight) {
    std::vector<int> shape(std::max(bound_.length(), 1), 0);
    for (int i = 0; i < inner_.length(); ++i) shape[i] = inner_[i];
    Rows fill(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) fill[i].assign(shape[i], 0);
    letter(acc, weight, shape, fill, 0);
  }

 private:
  void letter(std::map<Partition, std::int64_t>& acc, std::int64_t weight, std::vector<int>& shape, Rows& fill,
              int v) {
    if (v == rho_.length()) {
      if (lattice(fill)) acc[Partition(shape)] += weight;
      return;
    }
    const std::vector<int> base = shape;
    strip(acc, weight, shape, fill, v, 0, rho_[v], base);
  }

  void strip(std::map<Partition, std::int64_t>& acc, std::int64_t weight, std::vector<int>& shape, Rows& fill, int v,
             std::size_t row, int left, const std::vector<int>& base) {
    if (left == 0) {
      letter(acc, weight, shape, fill, v + 1);
      return;
    }
    if (row >= shape.size()) return;
    // horizontal strip: row may grow up to the previous row's old length
    const int cap = std::min(bound_[row], row == 0 ? bound_[0] : base[row - 1]);
    const int room = cap - shape[row];
    for (int add = std::min(room, left); add >= 0; --add) {
      for (int j = 0; j < add; ++j) fill[row].push_back(v + 1);
      shape[row] += add;
      strip(acc, weight, shape, fill, v, row + 1, left - add, base);
      shape[row] -= add;
      fill[row].resize(shape[row]);
    }
  }

  bool lattice(const Rows& fill) const {
    std::vector<int> cnt(rho_.length() + 2, 0);
    for (const auto& row : fill)
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        const int x = *it;
        if (x == 0) continue;
        ++cnt[x];
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
      }
    return true;
  }

  Partition inner_, bound_, rho_;
};

}  // namespace

std::int64_t lr_mult(const Partition& shape, const RectSeq& r) {
  if (shape.size() != r.total_cells()) return 0;
  std::map<Partition, std::int64_t> cur{{Partition(), 1}};
  for (const auto& rect : r.rects()) {
    std::map<Partition, std::int64_t> next;
    for (const auto& [nu, c] : cur) SkewLR(nu, shape, rect.partition()).run(next, c);
    cur = std::move(next);
  }
  auto it = cur.find(shape);
  return it == cur.end() ? 0 : it->second;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  QPoly out;
  if (lambda.size() != mu.size()) return out;
  for (const auto& t : enumerate_cst(lambda, mu.parts())) out.add(ls_cocharge(row_word(t)), 1);
  return out;
}

PropertyReport verify_monotonicity(const RectSeq& r, const RectSeq& s) {
  if (!pseudo_geq(r, s)) throw InvalidInput("verify_monotonicity: sequences are not comparable");
  PropertyReport rep;
  rep.name = "monotonicity " + to_string(r) + " >= " + to_string(s);
  const auto kr = kostka_polys(r);
  const auto ks = kostka_polys(s);
  const auto chain = chain_between(r, s);
  std::map<Partition, QPoly> witnessed;
  std::set<Tableau> image;
  for (const auto& t : enumerate_lrt_all(r)) {
    const Tableau img = insertion_tableau(theta_along(row_word(t), r, chain));
    if (img.shape() != t.shape() || !is_lr_tableau(img, s) || !image.insert(img).second)
      rep.fail("theta is not a shape-preserving injection at " + to_text(t));
    witnessed[img.shape()].add(charge_R(img, s), 1);
  }
  for (const auto& [shape, p] : kr) {
    ++rep.checked;
    auto it = ks.find(shape);
    const QPoly other = it == ks.end() ? QPoly() : it->second;
    if (!p.leq(other)) rep.fail("shape " + to_string(shape) + ": " + to_string(p) + " vs " + to_string(other));
    if (witnessed[shape] != p) rep.fail("shape " + to_string(shape) + ": charge not preserved by theta");
  }
  return rep;
}

PropertyReport verify_duality(const RectSeq& r) {
  PropertyReport rep;
  rep.name = "duality " + to_string(r);
  const RectSeq rt = r.transposed().dominant_form();
  const int n = n_stat(r);
  const auto kr = kostka_polys(r);
  const auto kt = kostka_polys(rt);
  std::set<Partition> shapes;
  for (const auto& [sh, p] : kr) shapes.insert(sh);
  for (const auto& [sh, p] : kt) shapes.insert(conjugate(sh));
  for (const auto& sh : shapes) {
    ++rep.checked;
    auto a = kr.find(sh);
    auto b = kt.find(conjugate(sh));
    const QPoly lhs = b == kt.end() ? QPoly() : b->second;
    const QPoly rhs = a == kr.end() ? QPoly() : a->second.reflected(n);
    if (lhs != rhs) rep.fail("shape " + to_string(sh) + ": " + to_string(lhs) + " vs " + to_string(rhs));
  }
  return rep;
}

}  // namespace gkostka
