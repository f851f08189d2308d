#pragma once

#include <vector>

#include "snalab/lattice.hpp"
#include "snalab/verdict.hpp"

namespace snalab {

// Subresiduated lattice (A, D): a bounded distributive lattice with a
// distinguished bounded sublattice D and the implication
// a -> b = max{ d in D : a /\ d <= b }.
class Srl {
 public:
  // Computes the implication table by scanning D; validates that D is a
  // bounded sublattice (NotASublattice) and that every maximum exists
  // (NoMaximum, defensive: it always does when D is a sublattice of a
  // finite distributive lattice).
  static Srl residuate(FiniteLattice lattice, ElemSet d);

  // Accepts an explicit implication table after shape checks only; intended
  // for injecting broken tables under test and for quotient construction.
  static Srl from_tables(FiniteLattice lattice, ElemSet d, std::vector<Elem> imp);

  const FiniteLattice& lattice() const { return lat_; }
  const ElemSet& d_set() const { return d_; }
  int size() const { return lat_.size(); }

  Elem imp(Elem a, Elem b) const { return imp_[a * size() + b]; }
  Elem box(Elem a) const { return box_[a]; }
  Elem neg(Elem a) const { return neg_[a]; }

  Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
  bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
  Elem bottom() const { return lat_.bottom(); }
  Elem top() const { return lat_.top(); }
  const std::string& name(Elem x) const { return lat_.name(x); }

  friend bool operator==(const Srl&, const Srl&) = default;

  // Empty placeholder; populated instances come from residuate/from_tables.
  Srl() = default;

 private:
  FiniteLattice lat_;
  ElemSet d_;
  std::vector<Elem> imp_;
  std::vector<Elem> box_;  // 1 -> a
  std::vector<Elem> neg_;  // a -> 0
};

// Checks the six defining identities plus the quasi-identity
// "a <= b->c implies a /\ b <= c" exhaustively. Laws are labeled srl1..srl6
// and srl-quasi; by default stops at the first failing law, with full_report
// all failing laws are collected (least witness each).
Verdict verify_srl(const Srl& s, bool full_report = false);

// Derived facts checked exhaustively: implication monotonicity, the interior
// behaviour of box, and the exchange/self-distribution laws.
Verdict srl_derived_properties(const Srl& s);

// De(A) = { a : a->0 = 0 }; also certified equal to { a \/ (a->0) : a in A }.
ElemSet dense_elements(const Srl& s);

// Lattice filters closed under box. Filters of a finite lattice are exactly
// the principal upsets, so candidates are the n upsets of single elements.
std::vector<ElemSet> open_filters(const Srl& s);

// Open filters containing every dense element.
std::vector<ElemSet> subresiduated_filters(const Srl& s);

bool is_open_filter(const Srl& s, const ElemSet& f);
bool is_subresiduated_filter(const Srl& s, const ElemSet& f);

// Homomorphisms of subresiduated lattices (preserve meet, join, ->, 0, 1).
using SrlMap = std::vector<Elem>;
Verdict check_srl_hom(const Srl& src, const Srl& dst, const SrlMap& f);
std::vector<SrlMap> srl_homomorphisms(const Srl& src, const Srl& dst);
bool srl_isomorphic(const Srl& a, const Srl& b);

}  // namespace snalab
