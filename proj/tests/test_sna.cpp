#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "snalab/sna.hpp"

using namespace snalab;
using corpus::get;
using corpus::tw_elem;

TEST_CASE("every corpus algebra is a Kleene algebra and passes the sna laws") {
  for (const auto& e : get().snas()) {
    CAPTURE(e.name);
    CHECK(verify_kleene(*e.t).pass());
    CHECK(verify_sna(*e.t).pass());
  }
}

TEST_CASE("K(s1) separates the two varieties: sna holds, nelson fails") {
  const auto& tw = get().k_s1;
  const SnaAlgebra& k = tw.algebra();
  CHECK(verify_sna(k).pass());
  Verdict v = verify_nelson(k);
  REQUIRE_FALSE(v.pass());

  const Failure* ne6 = v.find("Ne6");
  REQUIRE(ne6 != nullptr);
  CHECK(ne6->witness == std::vector<Elem>{tw_elem(tw, "1", "0"), tw_elem(tw, "a", "b")});
  CHECK(ne6->lhs == tw_elem(tw, "0", "b"));
  CHECK(ne6->rhs == tw_elem(tw, "a", "b"));

  const Failure* ne5 = v.find("Ne5");
  REQUIRE(ne5 != nullptr);
  CHECK(ne5->witness == std::vector<Elem>{tw_elem(tw, "a", "b"), tw_elem(tw, "b", "a"),
                                          tw_elem(tw, "0", "1")});
  CHECK(v.find("Ne4") == nullptr);
  CHECK(v.find("Ne8") == nullptr);
}

TEST_CASE("Heyting-based twists are Nelson algebras") {
  CHECK(verify_nelson(get().k_h4.algebra()).pass());
  CHECK(verify_nelson(get().k_hc3.algebra()).pass());
  CHECK(verify_nelson(get().k_sc2.algebra()).pass());
  CHECK(verify_nelson(get().k_h4_f1.algebra()).pass());
  CHECK(verify_nelson(get().one).pass());
}

TEST_CASE("a nelson pass implies an sna pass across the corpus") {
  for (const auto& e : get().snas()) {
    CAPTURE(e.name);
    if (verify_nelson(*e.t).pass()) CHECK(verify_sna(*e.t).pass());
  }
}

TEST_CASE("broken negation table is caught by the Kleene suite") {
  const SnaAlgebra& k = get().k_sc2.algebra();
  std::vector<Elem> neg(k.size()), imp(k.size() * k.size());
  for (Elem x = 0; x < k.size(); ++x) {
    neg[x] = k.neg(x);
    for (Elem y = 0; y < k.size(); ++y) imp[x * k.size() + y] = k.imp(x, y);
  }
  neg[0] = 0;  // the bottom is no longer swapped with the top
  SnaAlgebra broken = SnaAlgebra::from_tables(k.lattice(), imp, neg);
  Verdict v = verify_kleene(broken);
  CHECK_FALSE(v.pass());
}

TEST_CASE("derived properties hold corpus-wide and require an sna") {
  for (const auto& e : get().snas()) {
    CAPTURE(e.name);
    CHECK(derived_properties_suite(*e.t).pass());
  }
  // an algebra failing the sna laws is refused
  const SnaAlgebra& k = get().k_sc2.algebra();
  std::vector<Elem> neg(k.size()), imp(k.size() * k.size(), k.bottom());
  for (Elem x = 0; x < k.size(); ++x) neg[x] = k.neg(x);
  SnaAlgebra bad = SnaAlgebra::from_tables(k.lattice(), imp, neg);
  CHECK_THROWS_AS(derived_properties_suite(bad), AlgebraError);
}

TEST_CASE("products and subalgebras") {
  const auto& c = get();
  CHECK(c.p9.size() == 9);
  CHECK(c.p81.size() == 81);
  CHECK(verify_sna(c.p9).pass());
  // subalgebra carrier must be closed
  ElemSet open_set(c.k_s1.size());
  open_set.set(c.k_s1.algebra().bottom());
  open_set.set(c.k_s1.algebra().top());
  open_set.set(tw_elem(c.k_s1, "a", "b"));  // ~(a,b) = (b,a) missing
  CHECK_THROWS_AS(subalgebra(c.k_s1.algebra(), open_set), AlgebraError);
  try {
    subalgebra(c.k_s1.algebra(), open_set);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::NotASubalgebra);
  }
}

TEST_CASE("subuniverse scan") {
  const auto& c = get();
  auto subs = subuniverses(c.t7);
  // {bounds} closure forces (0,0): ~ fixes it… the least subuniverse is {(0,1),(1,0)}
  CHECK_FALSE(subs.empty());
  for (const auto& s : subs) {
    CHECK(s.test(c.t7.bottom()));
    CHECK(s.test(c.t7.top()));
    CHECK_NOTHROW(subalgebra(c.t7, s));
  }
  // the full carrier and the two-element subalgebra both appear
  CHECK(std::count(subs.begin(), subs.end(), ElemSet::full(c.t7.size())) == 1);
  CHECK(std::count(subs.begin(), subs.end(),
                   ElemSet::of(c.t7.size(), {c.t7.bottom(), c.t7.top()})) == 1);
  CHECK_THROWS_AS(subuniverses(c.p81), AlgebraError);
}

TEST_CASE("homomorphisms: identity, inclusion, composition") {
  const auto& c = get();
  // identity is always present
  auto endos = homomorphisms(c.u2, c.u2);
  HomMap id{0, 1};
  CHECK(std::count(endos.begin(), endos.end(), id) == 1);

  // the inclusion t7 -> K(s1) is a homomorphism
  ElemSet carrier(c.k_s1.size());
  for (const char* nm : {"(0,1)", "(0,b)", "(0,a)", "(0,0)", "(a,0)", "(b,0)", "(1,0)"})
    carrier.set(c.k_s1.algebra().lattice().index_of(nm));
  auto [sub, emb] = subalgebra_with_map(c.k_s1.algebra(), carrier);
  CHECK(check_sna_hom(c.t7, c.k_s1.algebra(), emb).pass());
  auto homs = homomorphisms(c.t7, c.k_s1.algebra());
  CHECK(std::count(homs.begin(), homs.end(), emb) == 1);

  // homomorphisms compose
  auto u2_in = homomorphisms(c.u2, c.t7);
  REQUIRE_FALSE(u2_in.empty());
  for (const auto& f : u2_in)
    for (const auto& g : homs) {
      HomMap comp(c.u2.size());
      for (Elem x = 0; x < c.u2.size(); ++x) comp[x] = g[f[x]];
      CHECK(check_sna_hom(c.u2, c.k_s1.algebra(), comp).pass());
    }
}

TEST_CASE("isomorphism is an equivalence that separates the corpus") {
  const auto& c = get();
  CHECK(is_isomorphic(c.t7, c.t7));
  CHECK_FALSE(is_isomorphic(c.t7, c.k_s1.algebra()));  // 7 vs 9 elements
  CHECK_FALSE(is_isomorphic(c.k_s1.algebra(), c.k_s2.algebra()));
  // K(h4) and K(sc2)^2 realize the same algebra
  CHECK(is_isomorphic(c.k_h4.algebra(), c.p9));
  CHECK(is_isomorphic(c.p9, c.k_h4.algebra()));
}

TEST_CASE("quotient by a congruence validates compatibility") {
  const auto& c = get();
  Partition bad = Partition::total(c.t7.size());
  CHECK_NOTHROW(quotient_algebra(c.t7, bad));  // the total partition is one
  // gluing only (0,1),(0,b) is not a congruence
  std::vector<int> raw(c.t7.size());
  for (int i = 0; i < c.t7.size(); ++i) raw[i] = i;
  raw[1] = 0;
  CHECK_THROWS_AS(quotient_algebra(c.t7, Partition::normalize(raw)), AlgebraError);
}
