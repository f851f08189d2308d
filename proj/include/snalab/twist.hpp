#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "snalab/partition.hpp"
#include "snalab/sna.hpp"
#include "snalab/srl.hpp"

namespace snalab {

// Twist algebra over a subresiduated lattice A: carrier {(a,b) : a /\ b = 0},
// optionally restricted to a \/ b in F for a subresiduated filter F, with
//   (a,b) ^ (c,d) = (a^c, b v d)        (a,b) v (c,d) = (a v c, b ^ d)
//   ~(a,b) = (b,a)                      (a,b) -> (c,d) = (a->c, a ^ d)
//   bottom (0,1), top (1,0).
// Pairs are enumerated with the first coordinate ascending and the second
// descending, so each fiber is listed bottom-up in the twist order.
class TwistAlgebra {
 public:
  const SnaAlgebra& algebra() const { return alg_; }
  const Srl& source() const { return src_; }
  const std::optional<ElemSet>& carrier_filter() const { return filter_; }

  int size() const { return alg_.size(); }
  std::pair<Elem, Elem> coords(Elem t) const { return coords_[t]; }
  // -1 when the pair is not in the carrier.
  Elem from_coords(Elem a, Elem b) const { return index_[a * src_.size() + b]; }

 private:
  friend TwistAlgebra make_twist(const Srl& a, const std::optional<ElemSet>& f);

  Srl src_;
  std::optional<ElemSet> filter_;
  SnaAlgebra alg_;
  std::vector<std::pair<Elem, Elem>> coords_;
  std::vector<Elem> index_;
};

// K(A); requires a valid sr-lattice (ValidationError otherwise). The result
// passes verify_sna and has center (0,0).
TwistAlgebra twist_full(const Srl& a);

// K(A, F) for a subresiduated filter F (NotSubresiduatedFilter otherwise);
// closure of the carrier under all operations is certified during the build.
TwistAlgebra twist_filtered(const Srl& a, const ElemSet& f);

// The kernel relation x ~ y iff x->y = 1 and y->x = 1. Certified to be an
// equivalence compatible with meet, join and -> (but deliberately not ~).
Partition theta(const SnaAlgebra& t);

struct ThetaQuotient {
  Partition classes;
  std::vector<Elem> rep;       // block id -> least member
  std::vector<int> class_of;   // element -> block id
  Srl quotient;                // certified sr-lattice with D = image of box
};

// T/theta with D = { box(x)/theta }; the induced implication is certified to
// coincide with the residuated implication recomputed from (lattice, D).
ThetaQuotient quotient_srl(const SnaAlgebra& t);

struct RhoResult {
  HomMap map;        // x -> (x/theta, ~x/theta) as an element of the target twist
  bool injective = false;
  bool surjective = false;
  ThetaQuotient quot;
  TwistAlgebra target;  // K(T/theta)
};

// The representation map; certified to be an injective homomorphism.
// Surjectivity is reported, never assumed.
RhoResult rho(const SnaAlgebra& t);

struct AlphaResult {
  SrlMap map;  // a -> class of (a, neg a); certified sr-lattice isomorphism
  ThetaQuotient quot;
  TwistAlgebra twist;
};

AlphaResult alpha(const Srl& a);

// K(f)(a,b) = (f(a), f(b)) for an sr-lattice homomorphism f : A -> B
// (NotAHomomorphism otherwise). The result is certified to be an algebra
// homomorphism K(A) -> K(B) and the naturality square with alpha is checked
// pointwise.
HomMap lift_hom(const Srl& a, const Srl& b, const SrlMap& f);

// C(g)(x/theta) = g(x)/theta for an algebra homomorphism g : T -> U
// (NotAHomomorphism otherwise). Certified sr-lattice homomorphism between the
// quotients; the naturality square with rho is checked pointwise.
SrlMap drop_hom(const SnaAlgebra& t, const SnaAlgebra& u, const HomMap& g);

}  // namespace snalab
