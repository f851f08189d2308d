#include "snalab/variety.hpp"

namespace snalab {

Elem t_value(const SnaAlgebra& t, Elem x, Elem y) {
  Elem fwd = t.meet(t.imp(x, y), t.imp(t.neg(y), t.neg(x)));
  Elem bwd = t.meet(t.imp(y, x), t.imp(t.neg(x), t.neg(y)));
  return t.join(fwd, bwd);
}

ChainVarietyVerdict check_chain_variety(const SnaAlgebra& t) {
  ChainVarietyVerdict v;
  const int n = t.size();
  for (Elem x = 0; x < n && v.box_join_ok; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.join(t.box(x), t.box(y));
      Elem rhs = t.box(t.join(x, y));
      if (lhs != rhs) {
        v.box_join_ok = false;
        v.box_join_witness = {x, y};
        v.box_join_lhs = lhs;
        v.box_join_rhs = rhs;
        break;
      }
    }
  for (Elem x = 0; x < n && v.t_ok; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem val = t_value(t, x, y);
      if (val != t.top()) {
        v.t_ok = false;
        v.t_witness = {x, y};
        v.t_val = val;
        break;
      }
    }
  return v;
}

std::vector<ElemSet> prime_oifs(const SnaAlgebra& t) {
  std::vector<ElemSet> out;
  ElemSet whole = ElemSet::full(t.size());
  for (const ElemSet& f : open_implicative_filters(t)) {
    if (f == whole) continue;
    bool prime = true;
    for (Elem x = 0; x < t.size() && prime; ++x)
      for (Elem y = 0; y < t.size(); ++y)
        if (f.test(t.join(x, y)) && !f.test(x) && !f.test(y)) { prime = false; break; }
    if (prime) out.push_back(f);
  }
  return out;
}

std::vector<ChainQuotient> chain_quotients(const SnaAlgebra& t) {
  ChainVarietyVerdict v = check_chain_variety(t);
  if (!v.t_ok)
    throw AlgebraError(Err::IdentityNotSatisfied, "t(x,y) = 1 fails, chain quotients undefined");
  std::vector<ChainQuotient> out;
  for (const ElemSet& p : prime_oifs(t)) {
    ChainQuotient cq;
    cq.prime = p;
    cq.partition = theta_of_filter(t, p);
    cq.quotient = quotient_algebra(t, cq.partition);
    if (!cq.quotient.lattice().is_chain())
      throw AlgebraError(Err::Internal, "quotient by a prime filter is not a chain");
    out.push_back(std::move(cq));
  }
  return out;
}

SubdirectEmbedding subdirect_embedding(const SnaAlgebra& t) {
  if (t.size() == 1) throw AlgebraError(Err::TrivialAlgebra, "one-element algebra");
  ChainVarietyVerdict v = check_chain_variety(t);
  if (!v.member())
    throw AlgebraError(Err::NotInVariety, "not a member of the chain-generated variety");

  SubdirectEmbedding e;
  e.factors = chain_quotients(t);
  if (e.factors.empty())
    throw AlgebraError(Err::Internal, "nontrivial member has no prime open implicative filter");

  const int n = t.size();
  e.image.resize(n);
  for (Elem x = 0; x < n; ++x) {
    e.image[x].reserve(e.factors.size());
    for (const auto& f : e.factors) e.image[x].push_back(f.partition.block[x]);
  }
  // Each projection is a homomorphism onto its factor.
  for (const auto& f : e.factors) {
    HomMap proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = f.partition.block[x];
    if (!check_sna_hom(t, f.quotient, proj).pass())
      throw AlgebraError(Err::Internal, "projection onto a chain quotient is not a homomorphism");
  }

  e.injective = true;
  for (Elem x = 0; x < n && e.injective; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (e.image[x] == e.image[y]) { e.injective = false; break; }

  ElemSet inter = ElemSet::full(n);
  for (const auto& f : e.factors) inter &= f.prime;
  e.primes_intersect_to_unit = inter == ElemSet::of(n, {t.top()});
  if (e.injective != e.primes_intersect_to_unit)
    throw AlgebraError(Err::Internal, "injectivity disagrees with the prime intersection test");
  return e;
}

}  // namespace snalab
