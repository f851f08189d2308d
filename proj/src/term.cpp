#include "snalab/term.hpp"

#include <algorithm>
#include <cctype>

namespace snalab {

std::vector<int> Term::variables() const {
  std::vector<int> out;
  auto walk = [&](auto&& self, const Term& t) -> void {
    if (t.kind == Kind::Var) {
      if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
    }
    for (const Term& k : t.kids) self(self, k);
  };
  walk(walk, *this);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::string_view kVarNames = "xyzwv";

struct Parser {
  std::string_view src;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw AlgebraError(Err::ParseError, msg + " at offset " + std::to_string(pos) + " in term '" +
                                            std::string(src) + "'");
  }
  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) { ++pos; return true; }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (src.substr(pos, w.size()) == w) { pos += w.size(); return true; }
    return false;
  }
  bool peek_arrow() {
    skip_ws();
    return src.substr(pos, 2) == "->";
  }
  // 'v' is the join operator only when followed by something that can start
  // an operand; in operand position it is the variable v.
  bool peek_join() {
    skip_ws();
    if (pos >= src.size() || src[pos] != 'v') return false;
    size_t q = pos + 1;
    while (q < src.size() && std::isspace(static_cast<unsigned char>(src[q]))) ++q;
    if (q >= src.size()) return false;
    char c = src[q];
    return c == '(' || c == '~' || c == '0' || c == '1' ||
           kVarNames.find(c) != std::string_view::npos || src.substr(q, 3) == "box";
  }

  Term parse() {
    Term t = imp();
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return t;
  }
  Term imp() {
    Term lhs = join();
    if (peek_arrow()) {
      pos += 2;
      return Term::imp(std::move(lhs), imp());
    }
    return lhs;
  }
  Term join() {
    Term t = meet();
    while (peek_join()) {
      ++pos;
      t = Term::join(std::move(t), meet());
    }
    return t;
  }
  Term meet() {
    Term t = unary();
    while (true) {
      skip_ws();
      if (pos < src.size() && src[pos] == '^') {
        ++pos;
        t = Term::meet(std::move(t), unary());
      } else {
        return t;
      }
    }
  }
  Term unary() {
    skip_ws();
    if (eat('~')) return Term::neg(unary());
    if (eat_word("box")) {
      if (!eat('(')) fail("expected '(' after box");
      Term t = imp();
      if (!eat(')')) fail("expected ')'");
      return Term::box(std::move(t));
    }
    return atom();
  }
  Term atom() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of term");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      Term t = imp();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '0') { ++pos; return Term::bot(); }
    if (c == '1') { ++pos; return Term::top(); }
    size_t vi = kVarNames.find(c);
    if (vi != std::string_view::npos) { ++pos; return Term::variable(static_cast<int>(vi)); }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Term parse_term(std::string_view src) {
  Parser p{src};
  return p.parse();
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return std::string(1, kVarNames[t.var]);
    case Term::Kind::Bot: return "0";
    case Term::Kind::Top: return "1";
    case Term::Kind::Neg: return "~" + to_string(t.kids[0]);
    case Term::Kind::Box: return "box(" + to_string(t.kids[0]) + ")";
    case Term::Kind::Meet: return "(" + to_string(t.kids[0]) + " ^ " + to_string(t.kids[1]) + ")";
    case Term::Kind::Join: return "(" + to_string(t.kids[0]) + " v " + to_string(t.kids[1]) + ")";
    case Term::Kind::Imp: return "(" + to_string(t.kids[0]) + " -> " + to_string(t.kids[1]) + ")";
  }
  return "?";
}

Elem eval_term(const SnaAlgebra& t, const Term& term, std::span<const Elem> assignment) {
  switch (term.kind) {
    case Term::Kind::Var:
      if (term.var >= static_cast<int>(assignment.size()) || assignment[term.var] < 0)
        throw AlgebraError(Err::UnboundVariable,
                           std::string("variable '") + kVarNames[term.var] + "' has no value");
      return assignment[term.var];
    case Term::Kind::Bot: return t.bottom();
    case Term::Kind::Top: return t.top();
    case Term::Kind::Neg: return t.neg(eval_term(t, term.kids[0], assignment));
    case Term::Kind::Box: return t.imp(t.top(), eval_term(t, term.kids[0], assignment));
    case Term::Kind::Meet:
      return t.meet(eval_term(t, term.kids[0], assignment), eval_term(t, term.kids[1], assignment));
    case Term::Kind::Join:
      return t.join(eval_term(t, term.kids[0], assignment), eval_term(t, term.kids[1], assignment));
    case Term::Kind::Imp:
      return t.imp(eval_term(t, term.kids[0], assignment), eval_term(t, term.kids[1], assignment));
  }
  throw AlgebraError(Err::Internal, "malformed term");
}

IdentityCheck satisfies_identity(const SnaAlgebra& t, const Term& lhs, const Term& rhs) {
  IdentityCheck res;
  std::vector<int> vars = lhs.variables();
  for (int v : rhs.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  res.vars = vars;

  const int n = t.size();
  const int k = static_cast<int>(vars.size());
  std::vector<Elem> asg(5, -1);
  std::vector<int> ctr(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) asg[vars[i]] = ctr[i];
    Elem a = eval_term(t, lhs, asg);
    Elem b = eval_term(t, rhs, asg);
    if (a != b) {
      res.holds = false;
      res.witness.assign(ctr.begin(), ctr.end());
      res.lhs = a;
      res.rhs = b;
      return res;
    }
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && ctr[i] == n - 1) { ctr[i] = 0; --i; }
    if (i < 0) break;
    ++ctr[i];
  }
  return res;
}

IdentityCheck satisfies_identity(const SnaAlgebra& t, std::string_view lhs, std::string_view rhs) {
  return satisfies_identity(t, parse_term(lhs), parse_term(rhs));
}

}  // namespace snalab
