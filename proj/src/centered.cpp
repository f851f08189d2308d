#include "snalab/centered.hpp"

namespace snalab {

std::optional<Elem> find_center(const SnaAlgebra& t) {
  std::optional<Elem> c;
  for (Elem x = 0; x < t.size(); ++x) {
    if (t.neg(x) != x) continue;
    if (c)
      throw AlgebraError(Err::MultipleFixedPoints,
                         "~ fixes both " + t.name(*c) + " and " + t.name(x));
    c = x;
  }
  return c;
}

CondResult check_ck(const SnaAlgebra& t) {
  std::optional<Elem> copt = find_center(t);
  if (!copt) throw AlgebraError(Err::NoCenter, "algebra has no center");
  const Elem c = *copt;
  const int n = t.size();
  for (Elem x = 0; x < n; ++x) {
    if (!t.leq(c, x)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (!t.leq(c, y) || !t.leq(t.meet(x, y), c)) continue;
      bool found = false;
      for (Elem z = 0; z < n; ++z)
        if (t.join(z, c) == x && t.join(t.neg(z), c) == y) { found = true; break; }
      if (!found) return {false, {x, y}};
    }
  }
  return {};
}

CondResult check_c(const SnaAlgebra& t) {
  std::optional<Elem> copt = find_center(t);
  if (!copt) throw AlgebraError(Err::NoCenter, "algebra has no center");
  const Elem c = *copt;
  const int n = t.size();
  CondResult res;
  for (Elem x = 0; x < n && res.holds; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (t.imp(t.meet(x, y), t.bottom()) != t.top()) continue;
      bool found = false;
      for (Elem z = 0; z < n; ++z)
        if (t.join(z, c) == t.join(x, c) && t.join(t.neg(z), c) == t.join(y, c)) {
          found = true;
          break;
        }
      if (!found) { res = {false, {x, y}}; break; }
    }
  if (res.holds != check_ck(t).holds)
    throw AlgebraError(Err::Internal, "(C) disagrees with (CK)");
  return res;
}

CenterReport center_report(const SnaAlgebra& t) {
  CenterReport r;
  r.center = find_center(t);
  if (!r.center) return r;
  r.ck = check_ck(t);
  r.c = check_c(t);
  r.rho_surjective = rho(t).surjective;
  if (r.ck->holds != r.c->holds || r.c->holds != *r.rho_surjective)
    throw AlgebraError(Err::Internal, "(CK) / (C) / rho-surjectivity equivalence fails");
  return r;
}

TwistRepresentation representable_as_twist(const SnaAlgebra& t) {
  TwistRepresentation rep;
  std::optional<Elem> c = find_center(t);
  if (!c) {
    rep.reason = "center-missing";
    return rep;
  }
  CondResult ck = check_ck(t);
  if (!ck.holds) {
    rep.reason = "ck-fails";
    rep.ck_witness = ck.witness;
    return rep;
  }
  RhoResult r = rho(t);
  if (!r.surjective)
    throw AlgebraError(Err::Internal, "centered algebra with (CK) but non-surjective rho");
  rep.representable = true;
  rep.witness_srl = r.quot.quotient;
  rep.iso = std::move(r);
  return rep;
}

}  // namespace snalab
