#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "snalab/congruence.hpp"

using namespace snalab;
using corpus::get;
using corpus::tw_elem;

namespace {

// Subset-scan oracle for the open implicative filter enumeration.
std::vector<ElemSet> oif_oracle(const SnaAlgebra& t) {
  const int n = t.size();
  std::vector<ElemSet> out;
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
    ElemSet f(n);
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1) f.set(i);
    if (is_open_implicative_filter(t, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("s-term basics") {
  const SnaAlgebra& k = get().k_s1.algebra();
  for (Elem x = 0; x < k.size(); ++x) {
    CHECK(s_value(k, x, x) == k.top());
    for (Elem y = 0; y < k.size(); ++y) CHECK(s_value(k, x, y) == s_value(k, y, x));
  }
  // spot value by tables
  Elem top = get().k_s1.algebra().top(), ab = tw_elem(get().k_s1, "a", "b");
  Elem expect = k.meet(k.meet(k.imp(top, ab), k.imp(ab, top)),
                       k.meet(k.imp(k.neg(top), k.neg(ab)), k.imp(k.neg(ab), k.neg(top))));
  CHECK(s_value(k, top, ab) == expect);
}

TEST_CASE("open implicative filters: principal scan equals the subset oracle") {
  for (const auto& e : get().snas_at_most(10)) {
    CAPTURE(e.name);
    CHECK(open_implicative_filters(*e.t) == oif_oracle(*e.t));
  }
}

TEST_CASE("K(s1) has exactly the unit filter and everything") {
  const SnaAlgebra& k = get().k_s1.algebra();
  auto fs = open_implicative_filters(k);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == ElemSet::of(9, {k.top()}));
  CHECK(fs[1] == ElemSet::full(9));
  // t7 likewise
  auto fs7 = open_implicative_filters(get().t7);
  REQUIRE(fs7.size() == 2);
  CHECK(fs7[0] == ElemSet::of(7, {get().t7.top()}));
}

TEST_CASE("generated filters satisfy the closed formula and the intersection oracle") {
  const auto& c = get();
  const SnaAlgebra& k = c.k_s1.algebra();
  // <{1}> = {1}
  CHECK(generate_oif(k, ElemSet::of(9, {k.top()})) == ElemSet::of(9, {k.top()}));
  // <(a,0)> is everything: box(a,0) = (0,0) and (0,0) -> y = top for all y
  CHECK(generate_oif(k, ElemSet::of(9, {tw_elem(c.k_s1, "a", "0")})) == ElemSet::full(9));
  CHECK_THROWS_AS(generate_oif(k, ElemSet(9)), AlgebraError);

  // singleton corollary: <x> = {y : box(x)->y = 1}, on several corpus algebras
  for (const auto& e : get().snas_at_most(9)) {
    CAPTURE(e.name);
    const SnaAlgebra& t = *e.t;
    for (Elem x = 0; x < t.size(); ++x) {
      ElemSet direct(t.size());
      for (Elem y = 0; y < t.size(); ++y)
        if (t.imp(t.box(x), y) == t.top()) direct.set(y);
      CHECK(generate_oif(t, ElemSet::of(t.size(), {x})) == direct);
    }
  }
}

TEST_CASE("extend_oif") {
  const auto& c = get();
  const SnaAlgebra& k = c.k_s1.algebra();
  ElemSet unit = ElemSet::of(9, {k.top()});
  CHECK(extend_oif(k, unit, k.top()) == unit);
  CHECK(extend_oif(k, unit, tw_elem(c.k_s1, "a", "0")) == ElemSet::full(9));
  CHECK(extend_oif(k, ElemSet::full(9), 3) == ElemSet::full(9));
  CHECK_THROWS_AS(extend_oif(k, ElemSet::of(9, {0}), 0), AlgebraError);
}

TEST_CASE("filters and congruences are inverse order isomorphisms") {
  for (const auto& e : get().snas_at_most(12)) {
    CAPTURE(e.name);
    const SnaAlgebra& t = *e.t;
    auto congruences = congruences_bruteforce(t);
    auto filters = open_implicative_filters(t);
    REQUIRE(congruences.size() == filters.size());

    for (const auto& f : filters) {
      Partition p = theta_of_filter(t, f);
      CHECK(std::count(congruences.begin(), congruences.end(), p) == 1);
      CHECK(filter_of_congruence(t, p) == f);  // F -> Theta(F) -> 1-class
    }
    for (const auto& p : congruences) {
      ElemSet f = filter_of_congruence(t, p);
      CHECK(std::count(filters.begin(), filters.end(), f) == 1);
      CHECK(theta_of_filter(t, f) == p);  // theta -> 1/theta -> Theta
    }
    // order preservation both ways (the 1-class comparability law)
    for (const auto& p : congruences)
      for (const auto& q : congruences) {
        ElemSet fp = filter_of_congruence(t, p), fq = filter_of_congruence(t, q);
        CHECK(p.refines(q) == fp.subset_of(fq));
      }
  }
}

TEST_CASE("congruence membership reduces to the four implications") {
  for (const auto& e : get().snas_at_most(9)) {
    CAPTURE(e.name);
    const SnaAlgebra& t = *e.t;
    for (const auto& p : congruences_bruteforce(t)) {
      ElemSet one = filter_of_congruence(t, p);
      for (Elem x = 0; x < t.size(); ++x)
        for (Elem y = 0; y < t.size(); ++y) {
          bool four = one.test(t.imp(x, y)) && one.test(t.imp(y, x)) &&
                      one.test(t.imp(t.neg(x), t.neg(y))) && one.test(t.imp(t.neg(y), t.neg(x)));
          CHECK(p.same(x, y) == four);
        }
    }
  }
}

TEST_CASE("congruence counts across the corpus") {
  const auto& c = get();
  CHECK(congruences_bruteforce(c.k_s1.algebra()).size() == 2);
  CHECK(congruences_bruteforce(c.t7).size() == 2);
  CHECK(congruences_bruteforce(c.k_h4.algebra()).size() == 4);
  CHECK(congruences_bruteforce(c.k_s2.algebra()).size() == 3);
  CHECK(congruences_bruteforce(c.one).size() == 1);
  CHECK(congruences_bruteforce(c.p9).size() == 4);
  CHECK_THROWS_AS(congruences_bruteforce(c.p81), AlgebraError);
  try {
    congruences_bruteforce(c.p81);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == Err::TooLarge);
  }
}

TEST_CASE("the unit filter gives the identity, the whole algebra the total congruence") {
  for (const auto& e : get().snas_at_most(10)) {
    CAPTURE(e.name);
    const SnaAlgebra& t = *e.t;
    CHECK(theta_of_filter(t, ElemSet::of(t.size(), {t.top()})) == Partition::identity(t.size()));
    CHECK(theta_of_filter(t, ElemSet::full(t.size())) == Partition::total(t.size()));
    CHECK(filter_of_congruence(t, Partition::identity(t.size())) ==
          ElemSet::of(t.size(), {t.top()}));
    CHECK(filter_of_congruence(t, Partition::total(t.size())) == ElemSet::full(t.size()));
  }
}

TEST_CASE("theta_of_filter and filter_of_congruence validate their inputs") {
  const SnaAlgebra& k = get().k_s1.algebra();
  CHECK_THROWS_AS(theta_of_filter(k, ElemSet::of(9, {0})), AlgebraError);
  std::vector<int> raw(9);
  for (int i = 0; i < 9; ++i) raw[i] = i;
  raw[1] = 0;  // gluing (0,1),(0,b) only is no congruence
  CHECK_THROWS_AS(filter_of_congruence(k, Partition::normalize(raw)), AlgebraError);
}

TEST_CASE("principal congruences") {
  const auto& c = get();
  const SnaAlgebra& k = c.k_s1.algebra();
  for (Elem x = 0; x < k.size(); ++x)
    CHECK(principal_congruence(k, x, x) == Partition::identity(9));
  CHECK(principal_congruence(k, k.bottom(), k.top()) == Partition::total(9));
  // simplicity: any nontrivial pair collapses everything
  CHECK(principal_congruence(k, tw_elem(c.k_s1, "a", "0"), k.top()) == Partition::total(9));
  // K(h4) has a proper principal congruence
  const SnaAlgebra& h = c.k_h4.algebra();
  Partition p = principal_congruence(h, tw_elem(c.k_h4, "a", "0"), h.top());
  CHECK(p.blocks > 1);
  CHECK(p.blocks < 9);
}

TEST_CASE("the principal-congruence formula matches the closure oracle on all 4-tuples") {
  for (const auto& e : get().snas_at_most(10)) {
    CAPTURE(e.name);
    const SnaAlgebra& t = *e.t;
    for (Elem x = 0; x < t.size(); ++x)
      for (Elem y = 0; y < t.size(); ++y) {
        Partition least = congruence_closure(t, {{x, y}});
        for (Elem z = 0; z < t.size(); ++z)
          for (Elem w = 0; w < t.size(); ++w)
            CHECK(in_principal(t, x, y, z, w) == least.same(z, w));
      }
  }
}

TEST_CASE("simple and subdirectly irreducible") {
  const auto& c = get();
  CHECK(is_simple(c.k_s1.algebra()));
  CHECK(is_simple(c.t7));
  CHECK(is_simple(c.u2));
  CHECK_FALSE(is_simple(c.k_h4.algebra()));
  CHECK_FALSE(is_simple(c.p9));
  CHECK_THROWS_AS(is_simple(c.one), AlgebraError);
  CHECK_THROWS_AS(is_subdirectly_irreducible(c.one), AlgebraError);

  // every simple corpus algebra is subdirectly irreducible
  for (const auto& e : get().snas()) {
    if (e.t->size() == 1) continue;
    CAPTURE(e.name);
    if (is_simple(*e.t)) CHECK(is_subdirectly_irreducible(*e.t));
  }
  CHECK(is_subdirectly_irreducible(c.k_s1.algebra()));
  CHECK_FALSE(is_subdirectly_irreducible(c.p9));
  CHECK_FALSE(is_subdirectly_irreducible(c.p81));

  // SI agrees with the brute-force Con definition on the small corpus
  for (const auto& e : get().snas_at_most(10)) {
    if (e.t->size() == 1) continue;
    CAPTURE(e.name);
    auto cons = congruences_bruteforce(*e.t);
    std::vector<Partition> proper;
    for (const auto& p : cons)
      if (!(p == Partition::identity(e.t->size()))) proper.push_back(p);
    bool has_monolith = false;
    for (const auto& cand : proper) {
      bool least = true;
      for (const auto& other : proper)
        if (!cand.refines(other)) { least = false; break; }
      if (least) { has_monolith = true; break; }
    }
    CHECK(is_subdirectly_irreducible(*e.t) == has_monolith);
    CHECK(is_simple(*e.t) == (cons.size() == 2));
  }
}

TEST_CASE("congruence extension") {
  const auto& c = get();
  const SnaAlgebra& k = c.k_s1.algebra();
  ElemSet carrier(9);
  for (const char* nm : {"(0,1)", "(0,b)", "(0,a)", "(0,0)", "(a,0)", "(b,0)", "(1,0)"})
    carrier.set(k.lattice().index_of(nm));

  CHECK(check_cep(k, carrier, Partition::identity(7)).pass());
  CHECK(check_cep(k, carrier, Partition::total(7)).pass());
  CHECK(check_cep(k, ElemSet::full(9), Partition::total(9)).pass());

  // exhaustively over subalgebras and congruences of the small corpus
  for (const auto& e : get().snas_at_most(10)) {
    CAPTURE(e.name);
    for (const ElemSet& u : subuniverses(*e.t)) {
      auto [sub, emb] = subalgebra_with_map(*e.t, u);
      for (const ElemSet& f : open_implicative_filters(sub))
        CHECK(check_cep(*e.t, u, theta_of_filter(sub, f)).pass());
    }
  }

  // input validation
  ElemSet not_closed(9);
  not_closed.set(k.bottom());
  not_closed.set(k.top());
  not_closed.set(tw_elem(c.k_s1, "a", "b"));
  CHECK_THROWS_AS(check_cep(k, not_closed, Partition::identity(3)), AlgebraError);
  std::vector<int> raw(7);
  for (int i = 0; i < 7; ++i) raw[i] = i;
  raw[1] = 0;
  CHECK_THROWS_AS(check_cep(k, carrier, Partition::normalize(raw)), AlgebraError);
}
