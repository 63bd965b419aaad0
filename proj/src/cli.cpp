#include "gkostka/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkostka/catabolism.hpp"
#include "gkostka/charge.hpp"
#include "gkostka/cyclage.hpp"
#include "gkostka/embed.hpp"
#include "gkostka/poly.hpp"
#include "gkostka/transpose.hpp"
#include "gkostka/verify.hpp"

namespace gkostka::cli {

namespace {

constexpr int kHardCap = 12;

struct Options {
  std::string rects, from, to, shape, content, input = "-", tableau;
  std::string order = "cocyclage", format = "text", mode = "row", suite;
  bool trace = false;
  int max_cells = 8;
};

Tableau read_tableau(const Options& o, std::istream& in) {
  if (!o.tableau.empty()) return parse_tableau(o.tableau);
  std::stringstream ss;
  if (o.input == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw InvalidInput("cannot open '" + o.input + "'");
    ss << f.rdbuf();
  }
  return parse_tableau(ss.str());
}

RectSeq need_rects(const std::string& spec, const char* flag) {
  if (spec.empty()) throw InvalidInput(std::string("missing ") + flag);
  return parse_rectseq(spec);
}

void check_cells(const RectSeq& r, int cap) {
  if (r.total_cells() > cap)
    throw InvalidInput("sequence has " + std::to_string(r.total_cells()) + " cells, above the limit " +
                       std::to_string(cap));
}

void print_tableau(std::ostream& out, const Tableau& t, const std::string& format) {
  if (format == "json") out << to_json(t) << "\n";
  else out << to_text(t);
}

void print_suite(std::ostream& out, const SuiteResult& r) {
  out << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& p : r.reports) {
    out << "  " << (p.ok ? "ok  " : "FAIL") << " " << p.name << " (" << p.checked << " checked)\n";
    if (!p.ok) out << "    counterexample: " << p.counterexample << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Kostka polynomials, LR tableaux for rectangle sequences, and their verification"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* c) {
    c->add_option("--input,-i", o.input, "tableau file in text or JSON form ('-' for stdin)");
    c->add_option("--tableau,-t", o.tableau, "tableau given inline, rows separated by '/'");
  };
  const auto add_rects = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--rects,-r", o.rects, "rectangle sequence, e.g. 2x3,2x3,3x2 (rows x cols)");
    if (required) opt->required();
  };

  auto* lrt = app.add_subcommand("lrt", "LR tableaux");
  lrt->require_subcommand(1);
  auto* lrt_enum = lrt->add_subcommand("enumerate", "list LRT(shape; R), or LRT(R) without --shape");
  lrt_enum->add_option("--shape,-s", o.shape, "partition, e.g. 5,4,3");
  add_rects(lrt_enum, true);
  lrt_enum->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* poly = app.add_subcommand("poly", "generalized Kostka polynomials");
  poly->require_subcommand(1);
  auto* pk = poly->add_subcommand("kostka", "K_{lambda;R}(q) for one shape or all shapes");
  add_rects(pk, true);
  pk->add_option("--shape,-s", o.shape);
  pk->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  auto* pkf = poly->add_subcommand("kf", "classical Kostka-Foulkes polynomial via cocharge");
  pkf->add_option("--shape,-s", o.shape)->required();
  pkf->add_option("--content,-c", o.content, "partition mu")->required();
  auto* pdual = poly->add_subcommand("dual", "check K_{lambda^t;R'}(q) = q^{n(R)} K_{lambda;R}(1/q)");
  add_rects(pdual, true);
  auto* pmono = poly->add_subcommand("mono", "check K_{lambda;R} <= K_{lambda;R'} coefficientwise");
  pmono->add_option("--from", o.from)->required();
  pmono->add_option("--to", o.to)->required();

  auto* poset = app.add_subcommand("poset", "cyclage posets");
  poset->require_subcommand(1);
  auto* pexp = poset->add_subcommand("export", "Hasse diagram of LRT(R)");
  add_rects(pexp, true);
  pexp->add_option("--order", o.order)->check(CLI::IsMember({"cocyclage", "strong", "cyclage"}));
  pexp->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  pexp->add_option("--max-cells", o.max_cells)->check(CLI::Range(1, kHardCap));

  auto* embed = app.add_subcommand("embed", "embeddings between sequences");
  embed->require_subcommand(1);
  auto* eapply = embed->add_subcommand("apply", "theta from --from to --to on an LR tableau");
  eapply->add_option("--from", o.from)->required();
  eapply->add_option("--to", o.to)->required();
  eapply->add_flag("--chain", o.trace, "also print the chain of elementary steps");
  add_input(eapply);
  auto* eimg = embed->add_subcommand("image-test", "is the tableau in the image of theta_R");
  add_rects(eimg, true);
  add_input(eimg);

  auto* atom = app.add_subcommand("atom", "multi-atoms");
  atom->require_subcommand(1);
  auto* alist = atom->add_subcommand("list", "matom(R) with the catabolism multi-type of each member");
  add_rects(alist, true);

  auto* ct = app.add_subcommand("ctype", "catabolism multi-type");
  add_input(ct);

  auto* cat = app.add_subcommand("catabolize", "R-catabolism (row) or R-column-catabolism (col)");
  add_rects(cat, true);
  cat->add_option("--mode", o.mode)->check(CLI::IsMember({"row", "col"}));
  cat->add_flag("--trace", o.trace);
  add_input(cat);

  auto* tr = app.add_subcommand("transpose", "tr_R from LRT(R) to LRT(R^t)");
  add_rects(tr, true);
  add_input(tr);

  auto* ver = app.add_subcommand("verify", "run a verification suite ('all' runs every suite)");
  ver->add_option("suite", o.suite)->required();
  ver->add_option("--max-cells", o.max_cells, "cell bound, default 8, at most 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      if (sub->get_subcommands().empty()) err << sub->help();
    return 2;
  }

  try {
    if (lrt_enum->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      const auto ts = o.shape.empty() ? enumerate_lrt_all(r) : enumerate_lrt(parse_partition(o.shape), r);
      bool first = true;
      for (const auto& t : ts) {
        if (!first && o.format == "text") out << "\n";
        first = false;
        print_tableau(out, t, o.format);
      }
      return 0;
    }
    if (pk->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      std::map<Partition, QPoly> ks;
      if (o.shape.empty()) ks = kostka_polys(r);
      else ks[parse_partition(o.shape)] = kostka_poly(parse_partition(o.shape), r);
      for (const auto& [lambda, p] : ks)
        out << to_string(lambda) << ": " << (o.format == "json" ? to_json(p) : to_string(p)) << "\n";
      return 0;
    }
    if (pkf->parsed()) {
      out << to_string(kostka_foulkes(parse_partition(o.shape), parse_partition(o.content))) << "\n";
      return 0;
    }
    if (pdual->parsed() || pmono->parsed()) {
      const auto rep = pdual->parsed() ? verify_duality(need_rects(o.rects, "--rects"))
                                       : verify_monotonicity(parse_rectseq(o.from), parse_rectseq(o.to));
      out << rep.name << ": " << (rep.ok ? "PASS" : "FAIL") << " (" << rep.checked << " checked)\n";
      if (!rep.ok) out << "counterexample: " << rep.counterexample << "\n";
      return rep.ok ? 0 : 1;
    }
    if (pexp->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      check_cells(r, o.max_cells);
      const PosetOrder ord = o.order == "strong"    ? PosetOrder::Strong
                             : o.order == "cyclage" ? PosetOrder::Cyclage
                                                    : PosetOrder::Cocyclage;
      const auto p = build_poset(r, ord, o.max_cells);
      out << (o.format == "json" ? to_json(p) : to_dot(p));
      if (o.format == "json") out << "\n";
      return 0;
    }
    if (eapply->parsed()) {
      const RectSeq r = parse_rectseq(o.from), s = parse_rectseq(o.to);
      const Tableau t = read_tableau(o, in);
      if (!is_lr_tableau(t, r)) throw InvalidInput("tableau is not an LR tableau for --from");
      if (o.trace)
        for (const auto& st : chain_between(r, s)) out << "# " << to_string(st) << "\n";
      out << to_text(theta(t, r, s));
      return 0;
    }
    if (eimg->parsed()) {
      out << (theta_image_contains(read_tableau(o, in), need_rects(o.rects, "--rects")) ? "true" : "false") << "\n";
      return 0;
    }
    if (alist->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      check_cells(r, kHardCap);
      bool first = true;
      for (const auto& s : matom(r)) {
        if (!first) out << "\n";
        first = false;
        out << "# ctype " << to_string(trimmed(ctype(s).xi)) << "\n" << to_text(s);
      }
      return 0;
    }
    if (ct->parsed()) {
      out << to_string(trimmed(ctype(read_tableau(o, in)).xi)) << "\n";
      return 0;
    }
    if (cat->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      const auto trace = catabolize(read_tableau(o, in), r, o.mode == "col" ? SliceMode::Col : SliceMode::Row);
      if (o.trace)
        for (const auto& st : trace.steps) out << "# " << st.op << "\n" << to_text(st.tableau) << "\n";
      out << (trace.verdict ? "catabolizable" : "not catabolizable") << "\n";
      return 0;
    }
    if (tr->parsed()) {
      const RectSeq r = need_rects(o.rects, "--rects");
      const Tableau t = read_tableau(o, in);
      if (!is_lr_tableau(t, r)) throw InvalidInput("tableau is not an LR tableau for --rects");
      out << to_text(tr_tab(t, r));
      return 0;
    }
    if (ver->parsed()) {
      if (o.max_cells < 1 || o.max_cells > kHardCap) {
        err << "error: --max-cells must lie in [1, " << kHardCap << "]\n";
        return 2;
      }
      if (o.max_cells > 8)
        err << "warning: --max-cells above 8 grows the rectangle orbits (t! arrangements) and the catalogs fast\n";
      std::vector<std::string> names;
      if (o.suite == "all") names = suite_names();
      else names.push_back(o.suite);
      bool ok = true;
      for (const auto& n : names) {
        const auto res = run_suite(n, o.max_cells);
        print_suite(out, res);
        ok = ok && res.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gkostka"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace gkostka::cli
