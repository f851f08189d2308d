#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snalab/sna.hpp"

namespace snalab {

// Term over the signature (^, v, ->, ~, 0, 1) plus the defined box(t) = 1->t.
// Variables are x, y, z, w, v (indices 0..4); 'v' doubles as the join symbol
// and is disambiguated by position when parsing.
struct Term {
  enum class Kind { Var, Bot, Top, Meet, Join, Imp, Neg, Box };

  Kind kind = Kind::Bot;
  int var = -1;
  std::vector<Term> kids;

  static Term variable(int i) { return Term{Kind::Var, i, {}}; }
  static Term bot() { return Term{Kind::Bot, -1, {}}; }
  static Term top() { return Term{Kind::Top, -1, {}}; }
  static Term meet(Term a, Term b) { return Term{Kind::Meet, -1, {std::move(a), std::move(b)}}; }
  static Term join(Term a, Term b) { return Term{Kind::Join, -1, {std::move(a), std::move(b)}}; }
  static Term imp(Term a, Term b) { return Term{Kind::Imp, -1, {std::move(a), std::move(b)}}; }
  static Term neg(Term a) { return Term{Kind::Neg, -1, {std::move(a)}}; }
  static Term box(Term a) { return Term{Kind::Box, -1, {std::move(a)}}; }

  // Ascending indices of the variables occurring in the term.
  std::vector<int> variables() const;
};

// Grammar (loosest to tightest): imp (right assoc) < v < ^ < ~, box(), atoms.
Term parse_term(std::string_view src);
std::string to_string(const Term& t);

// Bottom-up table evaluation; assignment slots are indexed by variable,
// a negative slot means unbound (UnboundVariable).
Elem eval_term(const SnaAlgebra& t, const Term& term, std::span<const Elem> assignment);

struct IdentityCheck {
  bool holds = true;
  std::vector<int> vars;       // variables quantified over, ascending
  std::vector<Elem> witness;   // least failing assignment, aligned with vars
  Elem lhs = -1;
  Elem rhs = -1;
};

// Exhaustive check of lhs = rhs over all assignments to the occurring
// variables, scanned in index-lexicographic order (first variable slowest).
IdentityCheck satisfies_identity(const SnaAlgebra& t, const Term& lhs, const Term& rhs);
IdentityCheck satisfies_identity(const SnaAlgebra& t, std::string_view lhs, std::string_view rhs);

}  // namespace snalab
