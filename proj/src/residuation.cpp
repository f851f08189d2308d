#include "snalab/residuation.hpp"

namespace snalab {

ResiduatedView::ResiduatedView(TwistAlgebra twist) : tw_(std::move(twist)) {
  const Srl& a = tw_.source();
  const int m = tw_.size();
  star_.resize(m * m);
  rarrow_.resize(m * m);
  for (Elem i = 0; i < m; ++i) {
    auto [p, q] = tw_.coords(i);
    for (Elem j = 0; j < m; ++j) {
      auto [r, s] = tw_.coords(j);
      Elem st = tw_.from_coords(a.meet(p, r), a.meet(a.imp(p, s), a.imp(r, q)));
      Elem ra = tw_.from_coords(a.meet(a.imp(p, r), a.imp(s, q)), a.meet(p, s));
      if (st < 0 || ra < 0)
        throw AlgebraError(Err::NotATwist, "residuated operation leaves the twist carrier at (" +
                                               tw_.algebra().name(i) + "," +
                                               tw_.algebra().name(j) + ")");
      star_[i * m + j] = st;
      rarrow_[i * m + j] = ra;
    }
  }
}

ResiduatedView residuated_view(const TwistAlgebra& k) { return ResiduatedView(k); }

Verdict verify_nelson_lattice(const ResiduatedView& v) {
  Verdict out;
  const SnaAlgebra& t = v.twist().algebra();
  const int n = v.size();
  const Elem one = t.top(), zero = t.bottom();
  auto nneg = [&](Elem x) { return v.rarrow(x, zero); };

  for (Elem x = 0; x < n && !out.find("star-comm"); ++x)
    for (Elem y = 0; y < n; ++y)
      if (v.star(x, y) != v.star(y, x)) {
        out.failures.push_back({"star-comm", {x, y}, v.star(x, y), v.star(y, x)});
        break;
      }
  for (Elem x = 0; x < n && !out.find("star-assoc"); ++x)
    for (Elem y = 0; y < n && !out.find("star-assoc"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = v.star(v.star(x, y), z);
        Elem rhs = v.star(x, v.star(y, z));
        if (lhs != rhs) { out.failures.push_back({"star-assoc", {x, y, z}, lhs, rhs}); break; }
      }
  for (Elem x = 0; x < n; ++x)
    if (v.star(one, x) != x) {
      out.failures.push_back({"star-unit", {x}, v.star(one, x), x});
      break;
    }
  for (Elem x = 0; x < n && !out.find("residuation"); ++x)
    for (Elem y = 0; y < n && !out.find("residuation"); ++y)
      for (Elem z = 0; z < n; ++z) {
        bool left = t.leq(v.star(x, y), z);
        bool right = t.leq(x, v.rarrow(y, z));
        if (left != right) {
          out.failures.push_back({"residuation", {x, y, z}, v.star(x, y), v.rarrow(y, z)});
          break;
        }
      }
  for (Elem x = 0; x < n; ++x)
    if (nneg(nneg(x)) != x) {
      out.failures.push_back({"involution", {x}, nneg(nneg(x)), x});
      break;
    }
  for (Elem x = 0; x < n && !out.find("nelson-inequality"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem x2 = v.star(x, x);
      Elem ny = nneg(y);
      Elem lhs = t.meet(v.rarrow(x2, y), v.rarrow(v.star(ny, ny), nneg(x)));
      Elem rhs = v.rarrow(x, y);
      if (!t.leq(lhs, rhs)) {
        out.failures.push_back({"nelson-inequality", {x, y}, lhs, rhs});
        break;
      }
    }
  return out;
}

GapResult term_translation_gap(const Srl& s) {
  const int n = s.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (s.meet(a, b) != s.bottom()) continue;
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          if (s.meet(c, d) != s.bottom()) continue;
          Elem lhs = s.imp(a, c);
          Elem rhs = s.imp(d, s.imp(a, b));
          if (!s.leq(lhs, rhs)) return {true, {a, b, c, d}, lhs, rhs};
        }
    }
  return {};
}

}  // namespace snalab
