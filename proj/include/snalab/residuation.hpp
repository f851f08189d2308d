#pragma once

#include <array>

#include "snalab/twist.hpp"
#include "snalab/verdict.hpp"

namespace snalab {

// Residuated-lattice view of a twist: over the source lattice,
//   (a,b) * (c,d)  = (a ^ c, (a->d) ^ (c->b))
//   (a,b) => (c,d) = ((a->c) ^ (d->b), a ^ d).
// The view is descriptive: which residuated-lattice laws actually hold is
// measured by verify_nelson_lattice, never assumed.
class ResiduatedView {
 public:
  explicit ResiduatedView(TwistAlgebra twist);

  const TwistAlgebra& twist() const { return tw_; }
  int size() const { return tw_.size(); }
  Elem star(Elem x, Elem y) const { return star_[x * size() + y]; }
  Elem rarrow(Elem x, Elem y) const { return rarrow_[x * size() + y]; }

 private:
  TwistAlgebra tw_;
  std::vector<Elem> star_;
  std::vector<Elem> rarrow_;
};

ResiduatedView residuated_view(const TwistAlgebra& k);  // NotATwist on closure escape

// Commutative-monoid laws for * with unit 1, the residuation adjunction
// x*y <= z iff x <= y=>z, involutivity of x=>0, and the Nelson inequality
// (x^2 => y) ^ ((-y)^2 => -x) <= x => y.
Verdict verify_nelson_lattice(const ResiduatedView& v);

struct GapResult {
  bool gap = false;
  std::array<Elem, 4> witness = {-1, -1, -1, -1};  // a, b, c, d
  Elem lhs = -1;  // a -> c
  Elem rhs = -1;  // d -> (a -> b)
};

// Searches for pairs (a,b), (c,d) in the twist carrier violating
// a->c <= d->(a->b); a witness means the usual Nelson-lattice term
// translation fails over this sr-lattice.
GapResult term_translation_gap(const Srl& a);

}  // namespace snalab
