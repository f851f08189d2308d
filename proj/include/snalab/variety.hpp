#pragma once

#include <vector>

#include "snalab/congruence.hpp"
#include "snalab/sna.hpp"

namespace snalab {

// t(x,y) = ((x->y) ^ (~y->~x)) v ((y->x) ^ (~x->~y)).
Elem t_value(const SnaAlgebra& t, Elem x, Elem y);

// Membership in the variety generated by the totally ordered algebras:
// box(x v y) = box(x) v box(y) together with t(x,y) = 1.
struct ChainVarietyVerdict {
  bool box_join_ok = true;
  std::vector<Elem> box_join_witness;  // (x, y)
  Elem box_join_lhs = -1;              // box(x) v box(y) at the witness
  Elem box_join_rhs = -1;              // box(x v y) at the witness
  bool t_ok = true;
  std::vector<Elem> t_witness;  // (x, y)
  Elem t_val = -1;

  bool member() const { return box_join_ok && t_ok; }
};

ChainVarietyVerdict check_chain_variety(const SnaAlgebra& t);

// Proper open implicative filters P with: x v y in P implies x in P or y in P.
std::vector<ElemSet> prime_oifs(const SnaAlgebra& t);

struct ChainQuotient {
  ElemSet prime;
  Partition partition;
  SnaAlgebra quotient;  // certified totally ordered
};

// Quotients by the prime open implicative filters; requires the t-identity
// (IdentityNotSatisfied otherwise). Every factor is certified to be a chain.
std::vector<ChainQuotient> chain_quotients(const SnaAlgebra& t);

struct SubdirectEmbedding {
  std::vector<ChainQuotient> factors;
  std::vector<std::vector<Elem>> image;  // element -> tuple of factor classes
  bool injective = false;
  bool primes_intersect_to_unit = false;
};

// x -> (x/P)_{P prime}; requires a nontrivial member of the chain variety
// (TrivialAlgebra / NotInVariety otherwise). Injectivity is certified both
// via distinct image tuples and via the intersection of the primes.
SubdirectEmbedding subdirect_embedding(const SnaAlgebra& t);

}  // namespace snalab
