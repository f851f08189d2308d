#include "snalab/twist.hpp"

#include <algorithm>

namespace snalab {

TwistAlgebra make_twist(const Srl& a, const std::optional<ElemSet>& f) {
  const int n = a.size();
  TwistAlgebra tw;
  tw.src_ = a;
  tw.filter_ = f;
  tw.index_.assign(n * n, -1);

  for (Elem p = 0; p < n; ++p)
    for (Elem q = n - 1; q >= 0; --q) {
      if (a.meet(p, q) != a.bottom()) continue;
      if (f && !f->test(a.join(p, q))) continue;
      tw.index_[p * n + q] = static_cast<Elem>(tw.coords_.size());
      tw.coords_.emplace_back(p, q);
    }

  const int m = static_cast<int>(tw.coords_.size());
  std::vector<std::string> names(m);
  std::vector<uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i) {
    auto [p, q] = tw.coords_[i];
    names[i] = "(" + a.name(p) + "," + a.name(q) + ")";
    for (int j = 0; j < m; ++j) {
      auto [r, s] = tw.coords_[j];
      leq[i * m + j] = (a.leq(p, r) && a.leq(s, q)) ? 1 : 0;
    }
  }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(leq));

  auto at = [&](Elem p, Elem q, const char* op) {
    Elem e = tw.index_[p * n + q];
    if (e < 0)
      throw AlgebraError(Err::NotSubresiduatedFilter,
                         std::string("carrier not closed under ") + op + " at (" + a.name(p) +
                             "," + a.name(q) + ")");
    return e;
  };
  std::vector<Elem> imp(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    auto [p, q] = tw.coords_[i];
    neg[i] = at(q, p, "~");
    for (int j = 0; j < m; ++j) {
      auto [r, s] = tw.coords_[j];
      // Lattice closure of the carrier is certified alongside ->.
      at(a.meet(p, r), a.join(q, s), "^");
      at(a.join(p, r), a.meet(q, s), "v");
      imp[i * m + j] = at(a.imp(p, r), a.meet(p, s), "->");
    }
  }
  tw.alg_ = SnaAlgebra::from_tables(std::move(L), std::move(imp), std::move(neg));

  if (tw.alg_.bottom() != at(a.bottom(), a.top(), "bottom") ||
      tw.alg_.top() != at(a.top(), a.bottom(), "top"))
    throw AlgebraError(Err::Internal, "twist bounds are not (0,1) and (1,0)");
  return tw;
}

TwistAlgebra twist_full(const Srl& a) {
  if (!verify_srl(a).pass())
    throw AlgebraError(Err::ValidationError, "twist source is not a valid sr-lattice");
  return make_twist(a, std::nullopt);
}

TwistAlgebra twist_filtered(const Srl& a, const ElemSet& f) {
  if (!verify_srl(a).pass())
    throw AlgebraError(Err::ValidationError, "twist source is not a valid sr-lattice");
  if (!is_subresiduated_filter(a, f))
    throw AlgebraError(Err::NotSubresiduatedFilter,
                       "filter is not an open filter containing the dense elements");
  return make_twist(a, f);
}

Partition theta(const SnaAlgebra& t) {
  const int n = t.size();
  auto related = [&](Elem x, Elem y) {
    return t.imp(x, y) == t.top() && t.imp(y, x) == t.top();
  };
  for (Elem x = 0; x < n; ++x)
    if (!related(x, x))
      throw AlgebraError(Err::ValidationError, "theta not reflexive at " + t.name(x));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (related(x, y) && related(y, z) && !related(x, z))
          throw AlgebraError(Err::ValidationError, "theta not transitive at (" + t.name(x) + "," +
                                                       t.name(y) + "," + t.name(z) + ")");
  std::vector<int> raw(n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < x; ++y)
      if (related(x, y)) { raw[x] = raw[y]; break; }
    if (raw[x] < 0) raw[x] = x;
  }
  Partition p = Partition::normalize(raw);

  // Compatibility with meet, join and -> (not with ~: the quotient forgets it).
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (!p.same(t.meet(x, z), t.meet(y, z)) || !p.same(t.join(x, z), t.join(y, z)) ||
            !p.same(t.imp(x, z), t.imp(y, z)) || !p.same(t.imp(z, x), t.imp(z, y)))
          throw AlgebraError(Err::ValidationError,
                             "theta incompatible with the lattice/implication operations at (" +
                                 t.name(x) + "," + t.name(y) + ")");
    }
  return p;
}

ThetaQuotient quotient_srl(const SnaAlgebra& t) {
  ThetaQuotient q;
  q.classes = theta(t);
  q.rep = q.classes.reps();
  q.class_of = q.classes.block;
  const int n = t.size();
  const int m = q.classes.blocks;

  // Induced operations factor through the blocks (checked on all members,
  // not just representatives).
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem rx = q.rep[q.class_of[x]], ry = q.rep[q.class_of[y]];
      if (q.class_of[t.meet(x, y)] != q.class_of[t.meet(rx, ry)] ||
          q.class_of[t.join(x, y)] != q.class_of[t.join(rx, ry)] ||
          q.class_of[t.imp(x, y)] != q.class_of[t.imp(rx, ry)])
        throw AlgebraError(Err::Internal, "quotient operations not well defined");
    }

  std::vector<std::string> names(m);
  std::vector<uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i) {
    names[i] = t.name(q.rep[i]);
    // Class order: x/theta <= y/theta iff x->y = 1.
    for (int j = 0; j < m; ++j)
      leq[i * m + j] = (t.imp(q.rep[i], q.rep[j]) == t.top()) ? 1 : 0;
  }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(leq));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (L.meet(i, j) != q.class_of[t.meet(q.rep[i], q.rep[j])] ||
          L.join(i, j) != q.class_of[t.join(q.rep[i], q.rep[j])])
        throw AlgebraError(Err::Internal, "quotient lattice disagrees with induced operations");

  ElemSet d(m);
  for (Elem x = 0; x < n; ++x) d.set(q.class_of[t.box(x)]);
  std::vector<Elem> imp(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) imp[i * m + j] = q.class_of[t.imp(q.rep[i], q.rep[j])];

  Srl induced = Srl::from_tables(L, d, imp);
  Srl residuated = Srl::residuate(L, d);
  if (!(induced == residuated))
    throw AlgebraError(Err::Internal,
                       "induced implication differs from the residuated implication");
  // Cross-check D against the box fixpoints of the induced implication.
  ElemSet fix(m);
  for (int i = 0; i < m; ++i)
    if (induced.box(i) == i) fix.set(i);
  if (!(fix == d)) throw AlgebraError(Err::Internal, "quotient D is not the box fixpoint set");
  if (!verify_srl(induced).pass())
    throw AlgebraError(Err::Internal, "quotient fails the sr-lattice laws");
  q.quotient = induced;
  return q;
}

RhoResult rho(const SnaAlgebra& t) {
  RhoResult r;
  r.quot = quotient_srl(t);
  r.target = twist_full(r.quot.quotient);
  const int n = t.size();
  r.map.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem e = r.target.from_coords(r.quot.class_of[x], r.quot.class_of[t.neg(x)]);
    if (e < 0)
      throw AlgebraError(Err::Internal, "rho image leaves the twist carrier at " + t.name(x));
    r.map[x] = e;
  }
  Verdict h = check_sna_hom(t, r.target.algebra(), r.map);
  if (!h.pass())
    throw AlgebraError(Err::Internal, "rho is not a homomorphism (" + h.failures[0].law + ")");
  r.injective = hom_injective(r.map);
  if (!r.injective) throw AlgebraError(Err::Internal, "rho is not injective");
  r.surjective = hom_surjective(r.map, r.target.size());
  return r;
}

AlphaResult alpha(const Srl& a) {
  AlphaResult res;
  res.twist = twist_full(a);
  res.quot = quotient_srl(res.twist.algebra());
  const int n = a.size();
  res.map.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem pair = res.twist.from_coords(x, a.neg(x));
    if (pair < 0) throw AlgebraError(Err::Internal, "(a, neg a) leaves the carrier");
    res.map[x] = res.quot.class_of[pair];
  }
  Verdict h = check_srl_hom(a, res.quot.quotient, res.map);
  if (!h.pass())
    throw AlgebraError(Err::Internal, "alpha is not a homomorphism (" + h.failures[0].law + ")");
  if (!hom_injective(res.map) || !hom_surjective(res.map, res.quot.quotient.size()))
    throw AlgebraError(Err::Internal, "alpha is not bijective");
  return res;
}

namespace {

// C(g) on classes, without the naturality check (used on both sides of it).
SrlMap drop_map(const SnaAlgebra& t, const HomMap& g, const ThetaQuotient& ct,
                const ThetaQuotient& cu) {
  SrlMap h(ct.classes.blocks, -1);
  for (Elem x = 0; x < t.size(); ++x) {
    int src = ct.class_of[x];
    int dst = cu.class_of[g[x]];
    if (h[src] < 0)
      h[src] = dst;
    else if (h[src] != dst)
      throw AlgebraError(Err::Internal, "dropped map not well defined at " + t.name(x));
  }
  Verdict v = check_srl_hom(ct.quotient, cu.quotient, h);
  if (!v.pass())
    throw AlgebraError(Err::Internal, "dropped map is not a homomorphism (" + v.failures[0].law + ")");
  return h;
}

HomMap lift_map(const SrlMap& f, const TwistAlgebra& ka, const TwistAlgebra& kb) {
  HomMap kf(ka.size());
  for (Elem e = 0; e < ka.size(); ++e) {
    auto [p, q] = ka.coords(e);
    Elem img = kb.from_coords(f[p], f[q]);
    if (img < 0) throw AlgebraError(Err::Internal, "lifted pair leaves the carrier");
    kf[e] = img;
  }
  Verdict v = check_sna_hom(ka.algebra(), kb.algebra(), kf);
  if (!v.pass())
    throw AlgebraError(Err::Internal, "lifted map is not a homomorphism (" + v.failures[0].law + ")");
  return kf;
}

}  // namespace

HomMap lift_hom(const Srl& a, const Srl& b, const SrlMap& f) {
  Verdict v = check_srl_hom(a, b, f);
  if (!v.pass())
    throw AlgebraError(Err::NotAHomomorphism,
                       "input is not an sr-lattice homomorphism (" + v.failures[0].law + ")");
  TwistAlgebra ka = twist_full(a), kb = twist_full(b);
  HomMap kf = lift_map(f, ka, kb);

  // Naturality: C(K(f)) after alpha_A equals alpha_B after f.
  AlphaResult aa = alpha(a), ab = alpha(b);
  SrlMap ckf = drop_map(ka.algebra(), kf, aa.quot, ab.quot);
  for (Elem x = 0; x < a.size(); ++x)
    if (ckf[aa.map[x]] != ab.map[f[x]])
      throw AlgebraError(Err::Internal, "alpha naturality square fails at " + a.name(x));
  return kf;
}

SrlMap drop_hom(const SnaAlgebra& t, const SnaAlgebra& u, const HomMap& g) {
  Verdict v = check_sna_hom(t, u, g);
  if (!v.pass())
    throw AlgebraError(Err::NotAHomomorphism,
                       "input is not an algebra homomorphism (" + v.failures[0].law + ")");
  ThetaQuotient ct = quotient_srl(t), cu = quotient_srl(u);
  SrlMap h = drop_map(t, g, ct, cu);

  // Naturality: K(C(g)) after rho_T equals rho_U after g.
  RhoResult rt = rho(t), ru = rho(u);
  HomMap kh = lift_map(h, rt.target, ru.target);
  for (Elem x = 0; x < t.size(); ++x)
    if (kh[rt.map[x]] != ru.map[g[x]])
      throw AlgebraError(Err::Internal, "rho naturality square fails at " + t.name(x));
  return h;
}

}  // namespace snalab
