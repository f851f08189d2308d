#include <doctest.h>

#include "corpus.hpp"
#include "snalab/centered.hpp"
#include "snalab/twist.hpp"

using namespace snalab;
using corpus::get;
using corpus::tw_elem;

TEST_CASE("K(s1): carrier and enumeration order") {
  const auto& tw = get().k_s1;
  REQUIRE(tw.size() == 9);
  std::vector<std::string> expected = {"(0,1)", "(0,b)", "(0,a)", "(0,0)", "(a,b)",
                                       "(a,0)", "(b,a)", "(b,0)", "(1,0)"};
  for (int i = 0; i < 9; ++i) CHECK(tw.algebra().name(i) == expected[i]);
  CHECK(tw.algebra().bottom() == 0);
  CHECK(tw.algebra().top() == 8);
  // coords and index agree
  for (Elem e = 0; e < tw.size(); ++e) {
    auto [p, q] = tw.coords(e);
    CHECK(tw.from_coords(p, q) == e);
    CHECK(tw.source().meet(p, q) == tw.source().bottom());
  }
  CHECK(tw.from_coords(tw.source().lattice().index_of("a"),
                       tw.source().lattice().index_of("a")) == -1);
}

TEST_CASE("twist of a chain is a chain") {
  const auto& c = get();
  CHECK(c.k_sc2.size() == 3);
  CHECK(c.k_sc2.algebra().lattice().is_chain());
  CHECK(c.k_sc3.size() == 5);
  CHECK(c.k_sc3.algebra().lattice().is_chain());
  CHECK(c.k_sc4.size() == 7);
  std::vector<std::string> expected = {"(0,1)", "(0,0)", "(1,0)"};
  for (int i = 0; i < 3; ++i) CHECK(c.k_sc2.algebra().name(i) == expected[i]);
}

TEST_CASE("twist operations match the defining formulas") {
  for (const TwistAlgebra* tw : {&get().k_s1, &get().k_s2, &get().k_h4, &get().k_sc3,
                                 &get().k_s2_fa, &get().k_h4_f1}) {
    const Srl& a = tw->source();
    const SnaAlgebra& k = tw->algebra();
    for (Elem i = 0; i < tw->size(); ++i) {
      auto [p, q] = tw->coords(i);
      CHECK(k.neg(i) == tw->from_coords(q, p));
      for (Elem j = 0; j < tw->size(); ++j) {
        auto [r, s] = tw->coords(j);
        CHECK(k.meet(i, j) == tw->from_coords(a.meet(p, r), a.join(q, s)));
        CHECK(k.join(i, j) == tw->from_coords(a.join(p, r), a.meet(q, s)));
        CHECK(k.imp(i, j) == tw->from_coords(a.imp(p, r), a.meet(p, s)));
        // (a,b) -> (c,d) is top iff a <= c
        CHECK((k.imp(i, j) == k.top()) == a.leq(p, r));
      }
    }
  }
}

TEST_CASE("the center of a full twist is (0,0)") {
  for (const TwistAlgebra* tw :
       {&get().k_s1, &get().k_s2, &get().k_h4, &get().k_sc2, &get().k_sc3, &get().k_sc4,
        &get().k_hc3}) {
    auto c = find_center(tw->algebra());
    REQUIRE(c.has_value());
    CHECK(*c == tw->from_coords(tw->source().bottom(), tw->source().bottom()));
    CHECK(tw->algebra().neg(*c) == *c);
  }
}

TEST_CASE("filtered twists") {
  const auto& c = get();
  // K(A, A) = K(A)
  TwistAlgebra full_filter = twist_filtered(c.s1, ElemSet::full(4));
  CHECK(full_filter.algebra() == c.k_s1.algebra());

  // Heyting b4 with F = {1}: the four complemented pairs
  REQUIRE(c.k_h4_f1.size() == 4);
  std::vector<std::string> expected = {"(0,1)", "(a,b)", "(b,a)", "(1,0)"};
  for (int i = 0; i < 4; ++i) CHECK(c.k_h4_f1.algebra().name(i) == expected[i]);

  // s2 with F = up(a): six pairs
  REQUIRE(c.k_s2_fa.size() == 6);
  std::vector<std::string> expected2 = {"(0,1)", "(0,a)", "(a,b)", "(a,0)", "(b,a)", "(1,0)"};
  for (int i = 0; i < 6; ++i) CHECK(c.k_s2_fa.algebra().name(i) == expected2[i]);

  // carrier restriction: a v b must lie in F
  for (Elem e = 0; e < c.k_s2_fa.size(); ++e) {
    auto [p, q] = c.k_s2_fa.coords(e);
    CHECK(c.s2.lattice().upset(1).test(c.s2.join(p, q)));
  }

  // filtered twists are subalgebras of the full twist (verify closure + laws)
  CHECK(verify_sna(c.k_s2_fa.algebra()).pass());
  CHECK(verify_sna(c.k_h4_f1.algebra()).pass());

  // a non-subresiduated filter is rejected: up(a) misses the dense element b of s1
  try {
    twist_filtered(c.s1, c.s1.lattice().upset(c.s1.lattice().index_of("a")));
    FAIL("expected NotSubresiduatedFilter");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::NotSubresiduatedFilter);
  }
}

TEST_CASE("theta groups twist elements by first coordinate") {
  const auto& c = get();
  Partition p = theta(c.k_s1.algebra());
  CHECK(p.blocks == 4);
  for (Elem x = 0; x < c.k_s1.size(); ++x)
    for (Elem y = 0; y < c.k_s1.size(); ++y)
      CHECK(p.same(x, y) == (c.k_s1.coords(x).first == c.k_s1.coords(y).first));
  CHECK(theta(c.t7).blocks == 4);
  CHECK(theta(c.u2).blocks == 2);
  CHECK(theta(c.one).blocks == 1);
}

TEST_CASE("theta is genuinely incompatible with ~ (the quotient forgets it)") {
  const auto& c = get();
  Partition p = theta(c.k_s1.algebra());
  const SnaAlgebra& k = c.k_s1.algebra();
  bool incompatible = false;
  for (Elem x = 0; x < k.size() && !incompatible; ++x)
    for (Elem y = 0; y < k.size(); ++y)
      if (p.same(x, y) && !p.same(k.neg(x), k.neg(y))) { incompatible = true; break; }
  CHECK(incompatible);
}

TEST_CASE("quotients are sr-lattices with the right D") {
  const auto& c = get();
  ThetaQuotient q = quotient_srl(c.k_s1.algebra());
  CHECK(q.classes.blocks == 4);
  CHECK(verify_srl(q.quotient, true).pass());
  CHECK(srl_isomorphic(q.quotient, c.s1));

  ThetaQuotient q7 = quotient_srl(c.t7);
  CHECK(srl_isomorphic(q7.quotient, c.s1));

  CHECK(quotient_srl(c.one).quotient.size() == 1);
  CHECK(srl_isomorphic(quotient_srl(c.k_s2.algebra()).quotient, c.s2));
  CHECK(srl_isomorphic(quotient_srl(c.k_s2_fa.algebra()).quotient, c.s2));

  // the class order is the unit-implication order
  const SnaAlgebra& k = c.k_s1.algebra();
  for (Elem x = 0; x < k.size(); ++x)
    for (Elem y = 0; y < k.size(); ++y)
      CHECK(q.quotient.leq(q.class_of[x], q.class_of[y]) == (k.imp(x, y) == k.top()));
}

TEST_CASE("rho is an injective homomorphism; surjectivity is reported") {
  const auto& c = get();
  for (const auto& e : c.snas()) {
    CAPTURE(e.name);
    RhoResult r = rho(*e.t);
    CHECK(r.injective);
    CHECK(check_sna_hom(*e.t, r.target.algebra(), r.map).pass());
    CHECK(verify_srl(r.quot.quotient).pass());
  }
  RhoResult r7 = rho(c.t7);
  CHECK_FALSE(r7.surjective);
  CHECK(r7.target.size() == 9);
  // the image misses exactly (a,b) and (b,a) of K(s1)
  std::vector<bool> hit(9, false);
  for (Elem img : r7.map) hit[img] = true;
  int missed = 0;
  for (Elem e = 0; e < 9; ++e)
    if (!hit[e]) ++missed;
  CHECK(missed == 2);
  CHECK(rho(c.k_s1.algebra()).surjective);
  CHECK(rho(c.one).surjective);
  CHECK_FALSE(rho(c.u2).surjective);
}

TEST_CASE("alpha is an isomorphism for every corpus sr-lattice") {
  for (const auto& e : get().srls()) {
    CAPTURE(e.name);
    AlphaResult a = alpha(*e.s);
    CHECK(a.map.size() == static_cast<size_t>(e.s->size()));
    CHECK(a.quot.classes.blocks == e.s->size());
    // alpha(1) is the top class
    CHECK(a.map[e.s->top()] == a.quot.quotient.top());
    CHECK(a.map[e.s->bottom()] == a.quot.quotient.bottom());
  }
}

TEST_CASE("lift and drop of homomorphisms, with naturality") {
  const auto& c = get();
  // identity on s1 lifts to the identity on K(s1)
  SrlMap id(c.s1.size());
  for (Elem x = 0; x < c.s1.size(); ++x) id[x] = x;
  HomMap kid = lift_hom(c.s1, c.s1, id);
  for (Elem e = 0; e < c.k_s1.size(); ++e) CHECK(kid[e] == e);

  // the unique hom c2 -> s1 lifts to an embedding of the 3-element twist
  SrlMap f{c.s1.bottom(), c.s1.top()};
  HomMap kf = lift_hom(c.sc2, c.s1, f);
  CHECK(kf.size() == 3);
  CHECK(hom_injective(kf));
  CHECK(check_sna_hom(c.k_sc2.algebra(), c.k_s1.algebra(), kf).pass());

  // the inclusion t7 -> K(s1) drops to an isomorphism of the quotients
  ElemSet carrier(c.k_s1.size());
  for (const char* nm : {"(0,1)", "(0,b)", "(0,a)", "(0,0)", "(a,0)", "(b,0)", "(1,0)"})
    carrier.set(c.k_s1.algebra().lattice().index_of(nm));
  auto [sub, emb] = subalgebra_with_map(c.k_s1.algebra(), carrier);
  SrlMap dropped = drop_hom(c.t7, c.k_s1.algebra(), emb);
  CHECK(hom_injective(dropped));
  CHECK(hom_surjective(dropped, 4));

  // a non-homomorphism is rejected
  SrlMap bad{c.s1.top(), c.s1.bottom()};
  CHECK_THROWS_AS(lift_hom(c.sc2, c.s1, bad), AlgebraError);
  try {
    lift_hom(c.sc2, c.s1, bad);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::NotAHomomorphism);
  }
}

TEST_CASE("twist sources that fail the laws are rejected") {
  const auto& c = get();
  std::vector<Elem> imp(16, c.s1.bottom());
  Srl broken = Srl::from_tables(c.s1.lattice(), c.s1.d_set(), imp);
  CHECK_THROWS_AS(twist_full(broken), AlgebraError);
}
