#pragma once

#include <utility>
#include <vector>

#include "snalab/partition.hpp"
#include "snalab/sna.hpp"
#include "snalab/verdict.hpp"

namespace snalab {

// s(x,y) = (x->y) ^ (y->x) ^ (~x->~y) ^ (~y->~x); the congruence term.
Elem s_value(const SnaAlgebra& t, Elem x, Elem y);

// Open implicative filter: contains 1, closed under modus ponens with ->,
// and closed under box. Such filters are meet-closed upsets, hence principal
// upsets, so enumeration scans the n single-generator upsets.
bool is_open_implicative_filter(const SnaAlgebra& t, const ElemSet& f);
std::vector<ElemSet> open_implicative_filters(const SnaAlgebra& t);

// <X> = { y : box(meet of X) -> y = 1 }; certified equal to the intersection
// of all open implicative filters containing X. Throws EmptyGeneratorSet.
ElemSet generate_oif(const SnaAlgebra& t, const ElemSet& x);

// <F u {x}> = { y : (min F ^ box x) -> y = 1 }; cross-checked against
// generate_oif on the union.
ElemSet extend_oif(const SnaAlgebra& t, const ElemSet& f, Elem x);

// Theta(F) = { (x,y) : s(x,y) in F }; certified congruence.
Partition theta_of_filter(const SnaAlgebra& t, const ElemSet& f);  // NotOpenImplicative
// 1/theta; certified open implicative filter.
ElemSet filter_of_congruence(const SnaAlgebra& t, const Partition& p);  // NotACongruence

bool is_congruence(const SnaAlgebra& t, const Partition& p);

// Independent oracle: every partition compatible with all four operations,
// by exhaustive partition enumeration. Guarded (TooLarge above the cap).
std::vector<Partition> congruences_bruteforce(const SnaAlgebra& t, int guard = 12);

// Least congruence containing the given pairs, by closure under the
// operation tables (independent of the s-term formula).
Partition congruence_closure(const SnaAlgebra& t, const std::vector<std::pair<Elem, Elem>>& pairs);

// (z,w) in theta(x,y) iff s(x,y) -> s(z,w) = 1.
bool in_principal(const SnaAlgebra& t, Elem x, Elem y, Elem z, Elem w);
// Materializes theta(x,y) from the formula and cross-checks it against the
// closure oracle.
Partition principal_congruence(const SnaAlgebra& t, Elem x, Elem y);

// Criterion: for every x != 1, box(x)->0 = 1; cross-checked against the
// filter enumeration. Throws TrivialAlgebra on the one-element algebra.
bool is_simple(const SnaAlgebra& t);

// Criterion: some x != 1 with box(y)->x = 1 for every y != 1; cross-checked
// against "the nonidentity congruences have a least element".
bool is_subdirectly_irreducible(const SnaAlgebra& t);

// Extends a congruence of the subalgebra on `carrier` to the parent (via the
// generated open implicative filter) and reports whether the restriction
// returns the original. Pass = congruence extension holds for this pair.
Verdict check_cep(const SnaAlgebra& t, const ElemSet& carrier, const Partition& p);

}  // namespace snalab
