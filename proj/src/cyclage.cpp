#include "gkostka/cyclage.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>

#include "gkostka/charge.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/rsk.hpp"

namespace gkostka {

Word w0R(const Word& w, const RectSeq& r) {
  Word out = w;
  for (int i = 0; i < r.count(); ++i) out = w0_action(out, r.subalphabet(i));
  return out;
}

Word chi_R(const Word& w, const RectSeq& r) {
  if (w.empty()) throw InvalidInput("chi_R needs a nonempty word");
  Word u(w.begin(), w.end() - 1);
  Word out = w0R(Word{w.back()}, r);
  Word tail = w0R(u, r);
  out.insert(out.end(), tail.begin(), tail.end());
  if (!is_lr_word(out, r)) throw ConsistencyError("chi_R left the set of LR words");
  return out;
}

Word chi_R_inverse(const Word& w, const RectSeq& r) {
  if (w.empty()) throw InvalidInput("chi_R_inverse needs a nonempty word");
  Word v(w.begin() + 1, w.end());
  Word out = w0R(v, r);
  out.push_back(w0R(Word{w.front()}, r).front());
  if (!is_lr_word(out, r)) throw ConsistencyError("chi_R inverse left the set of LR words");
  return out;
}

std::vector<Cover> cocyclage_covers(const Tableau& t, const RectSeq& r) {
  std::vector<Cover> out;
  const int a = r.max_cols();
  for (const Cell& s : corners(t.shape())) {
    if (s.col <= a) continue;
    auto [u, x] = reverse_row_insert(t, s);
    Word w = row_word(u);
    w.push_back(x);
    out.push_back({insertion_tableau(chi_R(w, r)), s});
  }
  return out;
}

std::vector<Cover> cyclage_covers(const Tableau& t, const RectSeq& r) {
  std::vector<Cover> out;
  const int b = r.max_rows();
  for (const Cell& s : corners(t.shape())) {
    if (s.row <= b) continue;
    auto [x, u] = reverse_column_insert(t, s);
    Word w{x};
    const Word uw = row_word(u);
    w.insert(w.end(), uw.begin(), uw.end());
    out.push_back({insertion_tableau(chi_R_inverse(w, r)), s});
  }
  return out;
}

bool is_strong_cover(const Word& u, Letter x, const RectSeq& r) {
  Word w = u;
  w.push_back(x);
  if (!is_lr_word(w, r)) throw InvalidInput("strong cover test needs an LR word");
  for (const auto& el : orbit(w, r))
    if (el.seq.count() > 0 && el.seq.subalphabet(0).contains(el.word.back())) return false;
  return true;
}

bool is_strong_cover(const Tableau& t, Cell cell, const RectSeq& r) {
  auto [u, x] = reverse_row_insert(t, cell);
  return is_strong_cover(row_word(u), x, r);
}

bool weak_cover(const Word& u, Letter x, WeakMode mode) {
  const Tableau pu = insertion_tableau(u);
  if (mode.kind == WeakMode::Column) return row_insert(pu, x).second.col > mode.at;
  return column_insert(pu, x).second.row > mode.at;
}

std::size_t GradedPoset::index_of(const Tableau& t) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  if (it == nodes.end() || *it != t) throw ConsistencyError("poset: cover leaves the node set");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::string to_string(PosetOrder order) {
  switch (order) {
    case PosetOrder::Cocyclage: return "cocyclage";
    case PosetOrder::Strong: return "strong";
    case PosetOrder::Cyclage: return "cyclage";
  }
  return "";
}

GradedPoset build_poset(const RectSeq& r, PosetOrder order, int max_cells) {
  if (r.total_cells() > max_cells) throw InvalidInput("poset: sequence exceeds the cell bound");
  GradedPoset p;
  p.nodes = enumerate_lrt_all(r);
  std::sort(p.nodes.begin(), p.nodes.end());
  for (const auto& t : p.nodes)
    p.grade.push_back(order == PosetOrder::Cyclage ? cocharge_R(t, r) : charge_R(t, r));
  const std::string kind = to_string(order);
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const Tableau& t = p.nodes[i];
    std::vector<Cover> cs;
    if (order == PosetOrder::Cyclage) {
      cs = cyclage_covers(t, r);
    } else if (order == PosetOrder::Cocyclage) {
      cs = cocyclage_covers(t, r);
    } else {
      // every corner whose ux passes the orbit test
      for (const Cell& s : corners(t.shape())) {
        auto [u, x] = reverse_row_insert(t, s);
        if (!is_strong_cover(row_word(u), x, r)) continue;
        Word w = row_word(u);
        w.push_back(x);
        cs.push_back({insertion_tableau(chi_R(w, r)), s});
      }
    }
    for (const auto& c : cs) {
      const std::size_t lo = p.index_of(c.lower);
      if (p.grade[lo] + 1 != p.grade[i])
        throw ConsistencyError("poset: a " + kind + " cover does not drop the grade by one");
      p.covers.push_back({lo, i, kind});
    }
  }
  std::sort(p.covers.begin(), p.covers.end(),
            [](const auto& a, const auto& b) { return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower); });
  p.covers.erase(std::unique(p.covers.begin(), p.covers.end(),
                             [](const auto& a, const auto& b) { return a.upper == b.upper && a.lower == b.lower; }),
                 p.covers.end());
  return p;
}

namespace {

std::string dot_label(const Tableau& t) {
  std::string s = to_text(t);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  std::string out;
  for (char c : s) out += c == '\n' ? std::string("\\n") : std::string(1, c);
  return out;
}

}  // namespace

std::string to_dot(const GradedPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_label(p.nodes[i]) << "\\ngrade " << p.grade[i] << "\"];\n";
  for (const auto& e : p.covers) os << "  n" << e.lower << " -> n" << e.upper << " [kind=" << e.kind << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const GradedPoset& p) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    j["nodes"].push_back({{"id", i}, {"grade", p.grade[i]}, {"rows", p.nodes[i].rows()}});
  j["covers"] = nlohmann::json::array();
  for (const auto& e : p.covers) j["covers"].push_back({{"lower", e.lower}, {"upper", e.upper}, {"kind", e.kind}});
  return j.dump(2);
}

}  // namespace gkostka
