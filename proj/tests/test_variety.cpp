#include <doctest.h>

#include "corpus.hpp"
#include "snalab/variety.hpp"

using namespace snalab;
using corpus::get;
using corpus::tw_elem;

TEST_CASE("t-term values") {
  const auto& c = get();
  for (const auto& e : c.snas()) {
    CAPTURE(e.name);
    for (Elem x = 0; x < e.t->size(); ++x) CHECK(t_value(*e.t, x, x) == e.t->top());
  }
  // chains satisfy t everywhere
  for (const SnaAlgebra* t : {&c.k_sc2.algebra(), &c.k_sc3.algebra(), &c.k_sc4.algebra()})
    for (Elem x = 0; x < t->size(); ++x)
      for (Elem y = 0; y < t->size(); ++y) CHECK(t_value(*t, x, y) == t->top());
  // K(s1) does not
  CHECK(t_value(c.k_s1.algebra(), tw_elem(c.k_s1, "a", "0"), tw_elem(c.k_s1, "b", "0")) ==
        tw_elem(c.k_s1, "0", "0"));
}

TEST_CASE("chain-variety membership across the corpus") {
  const auto& c = get();
  auto member = [](const SnaAlgebra& t) { return check_chain_variety(t).member(); };
  CHECK(member(c.k_sc2.algebra()));
  CHECK(member(c.k_sc3.algebra()));
  CHECK(member(c.k_sc4.algebra()));
  CHECK(member(c.k_hc3.algebra()));
  CHECK(member(c.k_h4.algebra()));   // isomorphic to a product of two 3-chains
  CHECK(member(c.k_h4_f1.algebra()));
  CHECK(member(c.u2));
  CHECK(member(c.one));
  CHECK(member(c.p9));
  CHECK_FALSE(member(c.k_s1.algebra()));
  CHECK_FALSE(member(c.k_s2.algebra()));
  CHECK_FALSE(member(c.k_s2_fa.algebra()));
  CHECK_FALSE(member(c.t7));
  CHECK_FALSE(member(c.p81));
  // every totally ordered corpus algebra is a member (soundness direction)
  for (const auto& e : c.snas()) {
    CAPTURE(e.name);
    if (e.t->lattice().is_chain()) CHECK(member(*e.t));
  }
}

TEST_CASE("the box-join witness on K(s1)") {
  const auto& c = get();
  ChainVarietyVerdict v = check_chain_variety(c.k_s1.algebra());
  REQUIRE_FALSE(v.box_join_ok);
  CHECK(v.box_join_witness ==
        std::vector<Elem>{tw_elem(c.k_s1, "a", "b"), tw_elem(c.k_s1, "b", "a")});
  CHECK(v.box_join_lhs == tw_elem(c.k_s1, "0", "0"));
  CHECK(v.box_join_rhs == c.k_s1.algebra().top());
  // t fails as well
  CHECK_FALSE(v.t_ok);
  // the values at the pair ((a,0),(b,0)) are the same
  const SnaAlgebra& k = c.k_s1.algebra();
  Elem a0 = tw_elem(c.k_s1, "a", "0"), b0 = tw_elem(c.k_s1, "b", "0");
  CHECK(k.join(k.box(a0), k.box(b0)) == tw_elem(c.k_s1, "0", "0"));
  CHECK(k.box(k.join(a0, b0)) == k.top());
}

TEST_CASE("prime open implicative filters") {
  const auto& c = get();
  // K(s1): the only proper filter {top} is not prime ((a,0) v (b,0) = top)
  CHECK(prime_oifs(c.k_s1.algebra()).empty());
  // chains: every proper open implicative filter is prime
  auto chain_primes = prime_oifs(c.k_sc2.algebra());
  REQUIRE(chain_primes.size() == 1);
  CHECK(chain_primes[0] == ElemSet::of(3, {c.k_sc2.algebra().top()}));
  for (const SnaAlgebra* t : {&c.k_sc3.algebra(), &c.k_sc4.algebra(), &c.k_hc3.algebra()}) {
    auto fs = open_implicative_filters(*t);
    auto ps = prime_oifs(*t);
    CHECK(ps.size() == fs.size() - 1);  // everything proper is prime in a chain
  }
  // the trivial algebra has no proper filter
  CHECK(prime_oifs(c.one).empty());
  // primes are a subset of the open implicative filters
  for (const auto& e : c.snas()) {
    CAPTURE(e.name);
    auto fs = open_implicative_filters(*e.t);
    for (const auto& p : prime_oifs(*e.t))
      CHECK(std::count(fs.begin(), fs.end(), p) == 1);
  }
}

TEST_CASE("prime separation on the box-join corpus algebras") {
  // Whenever an open implicative filter misses an ideal, some prime open
  // implicative filter extends it and still misses the ideal. Ideals of a
  // finite lattice are the principal downsets.
  for (const auto& e : get().snas()) {
    const SnaAlgebra& t = *e.t;
    if (!check_chain_variety(t).box_join_ok) continue;
    CAPTURE(e.name);
    auto primes = prime_oifs(t);
    for (const ElemSet& f : open_implicative_filters(t))
      for (Elem m = 0; m < t.size(); ++m) {
        ElemSet ideal = t.lattice().downset(m);
        if (!(f & ideal).empty()) continue;
        bool found = false;
        for (const ElemSet& p : primes)
          if (f.subset_of(p) && (p & ideal).empty()) { found = true; break; }
        CHECK(found);
      }
  }
}

TEST_CASE("chain quotients") {
  const auto& c = get();
  auto qs = chain_quotients(c.k_hc3.algebra());
  REQUIRE(qs.size() == 2);
  for (const auto& q : qs) CHECK(q.quotient.lattice().is_chain());
  // refuses when the t-identity fails
  CHECK_THROWS_AS(chain_quotients(c.k_s1.algebra()), AlgebraError);
  try {
    chain_quotients(c.k_s1.algebra());
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::IdentityNotSatisfied);
  }
}

TEST_CASE("subdirect embedding into chain quotients") {
  const auto& c = get();
  for (const auto& e : c.snas()) {
    if (e.t->size() == 1) continue;
    if (!check_chain_variety(*e.t).member()) continue;
    CAPTURE(e.name);
    SubdirectEmbedding emb = subdirect_embedding(*e.t);
    CHECK(emb.injective);
    CHECK(emb.primes_intersect_to_unit);
    CHECK_FALSE(emb.factors.empty());
    for (const auto& f : emb.factors) CHECK(f.quotient.lattice().is_chain());
  }
  // a chain embeds via the identity-like single factor
  SubdirectEmbedding ce = subdirect_embedding(c.k_sc2.algebra());
  CHECK(ce.factors.size() == 1);
  CHECK(ce.factors[0].quotient.size() == 3);
  // errors
  CHECK_THROWS_AS(subdirect_embedding(c.one), AlgebraError);
  CHECK_THROWS_AS(subdirect_embedding(c.k_s1.algebra()), AlgebraError);
  try {
    subdirect_embedding(c.k_s1.algebra());
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::NotInVariety);
  }
}
