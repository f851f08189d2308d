// snalab: a workbench for finite subresiduated lattices and subresiduated
// Nelson algebras. Exit codes: 0 = pass, 1 = the requested check failed
// (witnesses printed), 2 = the input could not be parsed or validated.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "snalab/algebra_file.hpp"
#include "snalab/centered.hpp"
#include "snalab/congruence.hpp"
#include "snalab/dot.hpp"
#include "snalab/residuation.hpp"
#include "snalab/term.hpp"
#include "snalab/variety.hpp"

using namespace snalab;

namespace {

std::string names_of(const SnaAlgebra& t, const std::vector<Elem>& xs) {
  std::string out = "(";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += t.name(xs[i]);
  }
  return out + ")";
}

std::string set_names(const SnaAlgebra& t, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ", ";
    out += t.name(e);
    first = false;
  }
  return out + "}";
}

void print_failure(const SnaAlgebra& t, const Failure& f) {
  std::cout << "FAIL " << f.law << " at " << names_of(t, f.witness);
  if (f.lhs >= 0) std::cout << "  lhs = " << t.name(f.lhs);
  if (f.rhs >= 0) std::cout << "  rhs = " << t.name(f.rhs);
  std::cout << "\n";
}

void print_failure_srl(const Srl& s, const Failure& f) {
  std::cout << "FAIL " << f.law << " at (";
  for (size_t i = 0; i < f.witness.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << s.name(f.witness[i]);
  }
  std::cout << ")";
  if (f.lhs >= 0) std::cout << "  lhs = " << s.name(f.lhs);
  if (f.rhs >= 0) std::cout << "  rhs = " << s.name(f.rhs);
  std::cout << "\n";
}

int report(const SnaAlgebra& t, const Verdict& v, const std::string& what, bool full) {
  if (v.pass()) {
    std::cout << "ok: " << what << "\n";
    return 0;
  }
  size_t shown = full ? v.failures.size() : 1;
  for (size_t i = 0; i < shown && i < v.failures.size(); ++i) print_failure(t, v.failures[i]);
  if (!full && v.failures.size() > 1)
    std::cout << "(" << v.failures.size() - 1 << " more failing laws; use --full-report)\n";
  return 1;
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw AlgebraError(Err::ParseError, "cannot write '" + out_path + "'");
  os << text;
}

ParsedAlgebra load(const std::string& path) { return parse_algebra_file(path); }

const SnaAlgebra& need_sna(const ParsedAlgebra& p) {
  if (p.kind != ParsedAlgebra::Kind::Sna)
    throw AlgebraError(Err::ValidationError, "this command needs an algebra of kind sna");
  return *p.sna;
}

const Srl& need_srl(const ParsedAlgebra& p) {
  if (p.kind != ParsedAlgebra::Kind::Srl)
    throw AlgebraError(Err::ValidationError, "this command needs an algebra of kind srl");
  return *p.srl;
}

const FiniteLattice& any_lattice(const ParsedAlgebra& p) {
  switch (p.kind) {
    case ParsedAlgebra::Kind::Lattice: return *p.lattice;
    case ParsedAlgebra::Kind::Srl: return p.srl->lattice();
    case ParsedAlgebra::Kind::Sna: return p.sna->lattice();
  }
  throw AlgebraError(Err::Internal, "unreachable");
}

TwistAlgebra need_twist(const ParsedAlgebra& p) {
  if (p.kind == ParsedAlgebra::Kind::Srl) return twist_full(*p.srl);
  if (p.kind == ParsedAlgebra::Kind::Sna && p.twist) return *p.twist;
  throw AlgebraError(Err::ValidationError,
                     "this command needs an srl file or an sna file built with twist_of");
}

int cmd_check(const std::string& path, const std::string& kind, bool full) {
  ParsedAlgebra p = load(path);
  if (kind == "srl") {
    const Srl& s = need_srl(p);
    Verdict v = verify_srl(s, full);
    if (v.pass()) {
      std::cout << "ok: sr-lattice laws hold (|A| = " << s.size()
                << ", |D| = " << s.d_set().count() << ")\n";
      return 0;
    }
    size_t shown = full ? v.failures.size() : 1;
    for (size_t i = 0; i < shown && i < v.failures.size(); ++i) print_failure_srl(s, v.failures[i]);
    return 1;
  }
  if (kind == "nelson-lattice") {
    ResiduatedView view = residuated_view(need_twist(p));
    return report(view.twist().algebra(), verify_nelson_lattice(view),
                  "involutive residuated lattice laws and the Nelson inequality hold", true);
  }
  // The algebra verifiers always collect every failing axiom (least witness
  // each), so their reports are printed in full.
  const SnaAlgebra& t = need_sna(p);
  if (kind == "kleene") return report(t, verify_kleene(t), "Kleene axioms Ne1..Ne3 hold", true);
  if (kind == "nelson") return report(t, verify_nelson(t), "Nelson axioms Ne1..Ne8 hold", true);
  if (kind == "sna")
    return report(t, verify_sna(t), "subresiduated Nelson axioms hold", true);
  throw AlgebraError(Err::ValidationError, "unknown kind '" + kind + "'");
}

int cmd_twist(const std::string& path, const std::string& filter, const std::string& out) {
  ParsedAlgebra p = load(path);
  const Srl& s = need_srl(p);
  TwistAlgebra tw = filter.empty()
                        ? twist_full(s)
                        : twist_filtered(s, s.lattice().upset(s.lattice().index_of(filter)));
  write_out(serialize(tw.algebra()), out);
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& out) {
  ParsedAlgebra p = load(path);
  const SnaAlgebra& t = need_sna(p);
  Verdict v = verify_sna(t);
  if (!v.pass()) {
    print_failure(t, v.failures[0]);
    return 1;
  }
  ThetaQuotient q = quotient_srl(t);
  write_out(serialize(q.quotient), out);
  return 0;
}

int cmd_congruences(const std::string& path) {
  ParsedAlgebra p = load(path);
  const SnaAlgebra& t = need_sna(p);
  Verdict v = verify_sna(t);
  if (!v.pass()) {
    print_failure(t, v.failures[0]);
    return 1;
  }
  std::cout << "open implicative filter <-> congruence (|T| = " << t.size() << ")\n";
  for (const ElemSet& f : open_implicative_filters(t)) {
    Partition p = theta_of_filter(t, f);
    std::cout << set_names(t, f) << " | classes = " << p.blocks
              << " | quotient size = " << p.blocks << "\n";
  }
  return 0;
}

int cmd_variety(const std::string& path) {
  ParsedAlgebra p = load(path);
  const SnaAlgebra& t = need_sna(p);
  Verdict sv = verify_sna(t);
  if (!sv.pass()) {
    print_failure(t, sv.failures[0]);
    return 1;
  }
  ChainVarietyVerdict v = check_chain_variety(t);
  std::cout << "box-join identity: " << (v.box_join_ok ? "holds" : "fails") << "\n";
  if (!v.box_join_ok)
    std::cout << "  witness " << names_of(t, v.box_join_witness) << "  box(x) v box(y) = "
              << t.name(v.box_join_lhs) << "  box(x v y) = " << t.name(v.box_join_rhs) << "\n";
  std::cout << "t identity: " << (v.t_ok ? "holds" : "fails") << "\n";
  if (!v.t_ok)
    std::cout << "  witness " << names_of(t, v.t_witness) << "  t = " << t.name(v.t_val) << "\n";
  std::cout << "member of the chain-generated variety: " << (v.member() ? "yes" : "no") << "\n";
  if (v.member() && t.size() > 1) {
    SubdirectEmbedding e = subdirect_embedding(t);
    std::cout << "subdirect embedding into " << e.factors.size() << " chain quotient(s):";
    for (const auto& f : e.factors) std::cout << " " << f.quotient.size();
    std::cout << "\n  injective = " << (e.injective ? "yes" : "no")
              << ", intersection of primes = {1}: "
              << (e.primes_intersect_to_unit ? "yes" : "no") << "\n";
  }
  return v.member() ? 0 : 1;
}

int cmd_center(const std::string& path) {
  ParsedAlgebra p = load(path);
  const SnaAlgebra& t = need_sna(p);
  Verdict sv = verify_sna(t);
  if (!sv.pass()) {
    print_failure(t, sv.failures[0]);
    return 1;
  }
  CenterReport r = center_report(t);
  if (!r.center) {
    std::cout << "center: none\n";
    return 0;
  }
  std::cout << "center: " << t.name(*r.center) << "\n";
  std::cout << "(CK): " << (r.ck->holds ? "holds" : "fails");
  if (!r.ck->holds)
    std::cout << "  witness (" << t.name(r.ck->witness.first) << ", "
              << t.name(r.ck->witness.second) << ")";
  std::cout << "\n(C): " << (r.c->holds ? "holds" : "fails") << "\n";
  std::cout << "rho surjective: " << (*r.rho_surjective ? "yes" : "no") << "\n";
  TwistRepresentation rep = representable_as_twist(t);
  std::cout << "isomorphic to a full twist: " << (rep.representable ? "yes" : "no") << "\n";
  return 0;
}

int cmd_residuated(const std::string& path) {
  ParsedAlgebra p = load(path);
  TwistAlgebra tw = need_twist(p);
  ResiduatedView view = residuated_view(tw);
  Verdict v = verify_nelson_lattice(view);
  if (v.pass()) {
    std::cout << "ok: involutive residuated lattice laws and the Nelson inequality hold\n";
  } else {
    std::cout << "the view fails " << v.failures.size() << " law(s):\n";
    for (const Failure& f : v.failures) print_failure(tw.algebra(), f);
  }
  GapResult g = term_translation_gap(tw.source());
  const Srl& s = tw.source();
  if (g.gap) {
    std::cout << "translation gap: a->c <= d->(a->b) fails at (a,b,c,d) = ("
              << s.name(g.witness[0]) << ", " << s.name(g.witness[1]) << ", "
              << s.name(g.witness[2]) << ", " << s.name(g.witness[3]) << ")"
              << "  a->c = " << s.name(g.lhs) << "  d->(a->b) = " << s.name(g.rhs) << "\n";
  } else {
    std::cout << "translation gap: none\n";
  }
  return 0;
}

int cmd_dot(const std::string& path, const std::string& out) {
  ParsedAlgebra p = load(path);
  write_out(to_dot(any_lattice(p)), out);
  return 0;
}

int cmd_identity(const std::string& path, const std::string& lhs, const std::string& rhs) {
  ParsedAlgebra p = load(path);
  const SnaAlgebra& t = need_sna(p);
  IdentityCheck r = satisfies_identity(t, lhs, rhs);
  if (r.holds) {
    std::cout << "ok: identity holds over all assignments\n";
    return 0;
  }
  std::cout << "FAIL identity at";
  const char* vars = "xyzwv";
  for (size_t i = 0; i < r.vars.size(); ++i)
    std::cout << " " << vars[r.vars[i]] << " = " << t.name(r.witness[i]);
  std::cout << "  lhs = " << t.name(r.lhs) << "  rhs = " << t.name(r.rhs) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite subresiduated lattices and subresiduated Nelson algebras"};
  app.require_subcommand(1);

  std::string path, kind = "sna", filter, out, lhs, rhs;
  bool full = false;

  auto* check = app.add_subcommand("check", "run an axiom suite against an algebra file");
  check->add_option("file", path)->required();
  check->add_option("--kind", kind, "srl | kleene | nelson | sna | nelson-lattice")
      ->check(CLI::IsMember({"srl", "kleene", "nelson", "sna", "nelson-lattice"}));
  check->add_flag("--full-report", full, "report every failing law, not just the first");

  auto* twist = app.add_subcommand("twist", "write the (filtered) twist of an sr-lattice");
  twist->add_option("file", path)->required();
  twist->add_option("--filter", filter, "upset generator of a subresiduated filter");
  twist->add_option("--out", out, "output path (default: stdout)");

  auto* quotient = app.add_subcommand("quotient", "write the sr-lattice quotient of an algebra");
  quotient->add_option("file", path)->required();
  quotient->add_option("--out", out);

  auto* congruences =
      app.add_subcommand("congruences", "print the filter <-> congruence table");
  congruences->add_option("file", path)->required();

  auto* variety = app.add_subcommand("variety", "chain-variety membership and decomposition");
  variety->add_option("file", path)->required();

  auto* center = app.add_subcommand("center", "center, conditions (CK)/(C), twist representation");
  center->add_option("file", path)->required();

  auto* residuated =
      app.add_subcommand("residuated", "residuated view of a twist and the translation gap");
  residuated->add_option("file", path)->required();

  auto* dot = app.add_subcommand("dot", "write the Hasse diagram in DOT format");
  dot->add_option("file", path)->required();
  dot->add_option("--out", out);

  auto* identity = app.add_subcommand("identity", "check an equational identity exhaustively");
  identity->add_option("file", path)->required();
  identity->add_option("lhs", lhs)->required();
  identity->add_option("rhs", rhs)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (check->parsed()) return cmd_check(path, kind, full);
    if (twist->parsed()) return cmd_twist(path, filter, out);
    if (quotient->parsed()) return cmd_quotient(path, out);
    if (congruences->parsed()) return cmd_congruences(path);
    if (variety->parsed()) return cmd_variety(path);
    if (center->parsed()) return cmd_center(path);
    if (residuated->parsed()) return cmd_residuated(path);
    if (dot->parsed()) return cmd_dot(path, out);
    if (identity->parsed()) return cmd_identity(path, lhs, rhs);
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
