#include "snalab/srl.hpp"

#include <algorithm>

namespace snalab {

namespace {

std::string wit(const FiniteLattice& L, std::initializer_list<Elem> xs) {
  std::string s = "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) s += ",";
    s += L.name(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

Srl Srl::residuate(FiniteLattice lattice, ElemSet d) {
  const int n = lattice.size();
  if (d.universe() != n)
    throw AlgebraError(Err::UnknownElement, "d_set universe does not match lattice");

  if (!d.test(lattice.bottom()) || !d.test(lattice.top()))
    throw AlgebraError(Err::NotASublattice, "d_set does not contain both bounds");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!d.test(x) || !d.test(y)) continue;
      if (!d.test(lattice.meet(x, y)) || !d.test(lattice.join(x, y)))
        throw AlgebraError(Err::NotASublattice,
                           "d_set not closed under meet/join at " + wit(lattice, {x, y}));
    }

  std::vector<Elem> imp(n * n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem best = -1;
      for (Elem cand = 0; cand < n; ++cand) {
        if (!d.test(cand) || !lattice.leq(lattice.meet(a, cand), b)) continue;
        bool greatest = true;
        for (Elem other = 0; other < n; ++other)
          if (d.test(other) && lattice.leq(lattice.meet(a, other), b) &&
              !lattice.leq(other, cand)) {
            greatest = false;
            break;
          }
        if (greatest) { best = cand; break; }
      }
      if (best < 0)
        throw AlgebraError(Err::NoMaximum,
                           "{d : a/\\d <= b} has no greatest element at " + wit(lattice, {a, b}));
      imp[a * n + b] = best;
    }
  return from_tables(std::move(lattice), std::move(d), std::move(imp));
}

Srl Srl::from_tables(FiniteLattice lattice, ElemSet d, std::vector<Elem> imp) {
  const int n = lattice.size();
  if (d.universe() != n)
    throw AlgebraError(Err::UnknownElement, "d_set universe does not match lattice");
  if (imp.size() != static_cast<size_t>(n) * n)
    throw AlgebraError(Err::ValidationError, "implication table has wrong size");
  for (Elem v : imp)
    if (v < 0 || v >= n)
      throw AlgebraError(Err::ValidationError, "implication table entry out of range");

  Srl s;
  s.lat_ = std::move(lattice);
  s.d_ = std::move(d);
  s.imp_ = std::move(imp);
  s.box_.resize(n);
  s.neg_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    s.box_[a] = s.imp_[s.lat_.top() * n + a];
    s.neg_[a] = s.imp_[a * n + s.lat_.bottom()];
  }
  return s;
}

Verdict verify_srl(const Srl& s, bool full_report) {
  Verdict v;
  const int n = s.size();
  auto done = [&] { return !v.failures.empty() && !full_report; };

  // srl1: (a \/ b) -> c = (a->c) /\ (b->c)
  for (Elem a = 0; a < n && v.find("srl1") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("srl1") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.imp(s.join(a, b), c);
        Elem rhs = s.meet(s.imp(a, c), s.imp(b, c));
        if (lhs != rhs) { v.failures.push_back({"srl1", {a, b, c}, lhs, rhs}); break; }
      }
  if (done()) return v;

  // srl2: c -> (a /\ b) = (c->a) /\ (c->b)
  for (Elem a = 0; a < n && v.find("srl2") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("srl2") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.imp(c, s.meet(a, b));
        Elem rhs = s.meet(s.imp(c, a), s.imp(c, b));
        if (lhs != rhs) { v.failures.push_back({"srl2", {a, b, c}, lhs, rhs}); break; }
      }
  if (done()) return v;

  // srl3: (a->b) /\ (b->c) <= a->c
  for (Elem a = 0; a < n && v.find("srl3") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("srl3") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.meet(s.imp(a, b), s.imp(b, c));
        Elem rhs = s.imp(a, c);
        if (!s.leq(lhs, rhs)) { v.failures.push_back({"srl3", {a, b, c}, lhs, rhs}); break; }
      }
  if (done()) return v;

  // srl4: a -> a = 1
  for (Elem a = 0; a < n; ++a) {
    Elem lhs = s.imp(a, a);
    if (lhs != s.top()) { v.failures.push_back({"srl4", {a}, lhs, s.top()}); break; }
  }
  if (done()) return v;

  // srl5: a /\ (a->b) <= b
  for (Elem a = 0; a < n && v.find("srl5") == nullptr; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem lhs = s.meet(a, s.imp(a, b));
      if (!s.leq(lhs, b)) { v.failures.push_back({"srl5", {a, b}, lhs, b}); break; }
    }
  if (done()) return v;

  // srl6: a->b <= c -> (a->b)
  for (Elem a = 0; a < n && v.find("srl6") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("srl6") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.imp(a, b);
        Elem rhs = s.imp(c, lhs);
        if (!s.leq(lhs, rhs)) { v.failures.push_back({"srl6", {a, b, c}, lhs, rhs}); break; }
      }
  if (done()) return v;

  // srl-quasi: a <= b->c implies a /\ b <= c
  for (Elem a = 0; a < n && v.find("srl-quasi") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("srl-quasi") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (!s.leq(a, s.imp(b, c))) continue;
        Elem lhs = s.meet(a, b);
        if (!s.leq(lhs, c)) { v.failures.push_back({"srl-quasi", {a, b, c}, lhs, c}); break; }
      }
  return v;
}

Verdict srl_derived_properties(const Srl& s) {
  Verdict v;
  const int n = s.size();

  // a <= b implies c->a <= c->b and b->c <= a->c
  for (Elem a = 0; a < n && v.find("imp-monotone") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("imp-monotone") == nullptr; ++b) {
      if (!s.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!s.leq(s.imp(c, a), s.imp(c, b)) || !s.leq(s.imp(b, c), s.imp(a, c))) {
          v.failures.push_back({"imp-monotone", {a, b, c}, s.imp(c, a), s.imp(c, b)});
          break;
        }
      }
    }

  // box is an interior operator onto D: box a <= a, box box a = box a, box 1 = 1
  for (Elem a = 0; a < n; ++a) {
    if (!s.leq(s.box(a), a) || s.box(s.box(a)) != s.box(a)) {
      v.failures.push_back({"box-interior", {a}, s.box(a), a});
      break;
    }
  }
  if (s.box(s.top()) != s.top())
    v.failures.push_back({"box-interior", {s.top()}, s.box(s.top()), s.top()});

  // a->(b->c) <= (a->b)->(a->c)
  for (Elem a = 0; a < n && v.find("imp-self-distrib") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("imp-self-distrib") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.imp(a, s.imp(b, c));
        Elem rhs = s.imp(s.imp(a, b), s.imp(a, c));
        if (!s.leq(lhs, rhs)) { v.failures.push_back({"imp-self-distrib", {a, b, c}, lhs, rhs}); break; }
      }

  // box a -> (box b -> c) = box b -> (box a -> c)
  for (Elem a = 0; a < n && v.find("box-exchange") == nullptr; ++a)
    for (Elem b = 0; b < n && v.find("box-exchange") == nullptr; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = s.imp(s.box(a), s.imp(s.box(b), c));
        Elem rhs = s.imp(s.box(b), s.imp(s.box(a), c));
        if (lhs != rhs) { v.failures.push_back({"box-exchange", {a, b, c}, lhs, rhs}); break; }
      }

  // box b <= a -> (a /\ b)
  for (Elem a = 0; a < n && v.find("box-meet-adjoint") == nullptr; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem lhs = s.box(b);
      Elem rhs = s.imp(a, s.meet(a, b));
      if (!s.leq(lhs, rhs)) { v.failures.push_back({"box-meet-adjoint", {a, b}, lhs, rhs}); break; }
    }

  // D is both the fixpoint set and the image of box.
  ElemSet fix(n), image(n);
  for (Elem a = 0; a < n; ++a) {
    if (s.box(a) == a) fix.set(a);
    image.set(s.box(a));
  }
  if (!(fix == s.d_set()) || !(image == s.d_set()))
    v.failures.push_back({"d-characterization", {}, -1, -1});

  return v;
}

ElemSet dense_elements(const Srl& s) {
  const int n = s.size();
  ElemSet de(n);
  for (Elem a = 0; a < n; ++a)
    if (s.neg(a) == s.bottom()) de.set(a);
  ElemSet alt(n);
  for (Elem a = 0; a < n; ++a) alt.set(s.join(a, s.neg(a)));
  if (!(de == alt))
    throw AlgebraError(Err::Internal, "dense elements differ from {a \\/ neg a}");
  return de;
}

bool is_open_filter(const Srl& s, const ElemSet& f) {
  const int n = s.size();
  if (f.universe() != n)
    throw AlgebraError(Err::UnknownElement, "filter universe does not match lattice");
  if (!f.test(s.top())) return false;
  for (Elem x = 0; x < n; ++x) {
    if (!f.test(x)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (s.leq(x, y) && !f.test(y)) return false;
      if (f.test(y) && !f.test(s.meet(x, y))) return false;
    }
    if (!f.test(s.box(x))) return false;
  }
  return true;
}

bool is_subresiduated_filter(const Srl& s, const ElemSet& f) {
  return is_open_filter(s, f) && dense_elements(s).subset_of(f);
}

std::vector<ElemSet> open_filters(const Srl& s) {
  // Every filter of a finite lattice is the upset of its least element, so the
  // principal upsets exhaust the candidates.
  std::vector<ElemSet> out;
  for (Elem m = 0; m < s.size(); ++m) {
    ElemSet f = s.lattice().upset(m);
    if (is_open_filter(s, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> subresiduated_filters(const Srl& s) {
  ElemSet de = dense_elements(s);
  std::vector<ElemSet> out;
  for (const ElemSet& f : open_filters(s))
    if (de.subset_of(f)) out.push_back(f);
  return out;
}

Verdict check_srl_hom(const Srl& src, const Srl& dst, const SrlMap& f) {
  Verdict v;
  const int n = src.size();
  if (f.size() != static_cast<size_t>(n)) {
    v.failures.push_back({"hom-shape", {}, -1, -1});
    return v;
  }
  for (Elem x : f)
    if (x < 0 || x >= dst.size()) {
      v.failures.push_back({"hom-range", {}, -1, -1});
      return v;
    }
  if (f[src.bottom()] != dst.bottom())
    v.failures.push_back({"hom-bottom", {src.bottom()}, f[src.bottom()], dst.bottom()});
  if (f[src.top()] != dst.top())
    v.failures.push_back({"hom-top", {src.top()}, f[src.top()], dst.top()});
  for (Elem x = 0; x < n && v.pass(); ++x)
    for (Elem y = 0; y < n; ++y) {
      if (f[src.meet(x, y)] != dst.meet(f[x], f[y])) {
        v.failures.push_back({"hom-meet", {x, y}, f[src.meet(x, y)], dst.meet(f[x], f[y])});
        break;
      }
      if (f[src.join(x, y)] != dst.join(f[x], f[y])) {
        v.failures.push_back({"hom-join", {x, y}, f[src.join(x, y)], dst.join(f[x], f[y])});
        break;
      }
      if (f[src.imp(x, y)] != dst.imp(f[x], f[y])) {
        v.failures.push_back({"hom-imp", {x, y}, f[src.imp(x, y)], dst.imp(f[x], f[y])});
        break;
      }
    }
  return v;
}

namespace {

void srl_hom_search(const Srl& A, const Srl& B, SrlMap& f, Elem next, bool bijective,
                    std::vector<uint8_t>& used, std::vector<SrlMap>& out, bool stop_at_first) {
  const int n = A.size();
  if (next == n) {
    out.push_back(f);
    return;
  }
  for (Elem w = 0; w < B.size(); ++w) {
    if (bijective && used[w]) continue;
    if (next == A.bottom() && w != B.bottom()) continue;
    if (next == A.top() && w != B.top()) continue;
    f[next] = w;
    bool ok = true;
    for (Elem i = 0; i <= next && ok; ++i)
      for (Elem j = 0; j <= next && ok; ++j) {
        Elem m = A.meet(i, j), jn = A.join(i, j), im = A.imp(i, j);
        if (m <= next && f[m] != B.meet(f[i], f[j])) ok = false;
        if (jn <= next && f[jn] != B.join(f[i], f[j])) ok = false;
        if (im <= next && f[im] != B.imp(f[i], f[j])) ok = false;
      }
    if (ok) {
      if (bijective) used[w] = 1;
      srl_hom_search(A, B, f, next + 1, bijective, used, out, stop_at_first);
      if (bijective) used[w] = 0;
      if (stop_at_first && !out.empty()) { f[next] = -1; return; }
    }
    f[next] = -1;
  }
}

}  // namespace

std::vector<SrlMap> srl_homomorphisms(const Srl& src, const Srl& dst) {
  SrlMap f(src.size(), -1);
  std::vector<uint8_t> used(dst.size(), 0);
  std::vector<SrlMap> out;
  srl_hom_search(src, dst, f, 0, false, used, out, false);
  std::vector<SrlMap> verified;
  for (auto& h : out)
    if (check_srl_hom(src, dst, h).pass()) verified.push_back(h);
  return verified;
}

bool srl_isomorphic(const Srl& a, const Srl& b) {
  if (a.size() != b.size() || a.d_set().count() != b.d_set().count()) return false;
  SrlMap f(a.size(), -1);
  std::vector<uint8_t> used(b.size(), 0);
  std::vector<SrlMap> out;
  srl_hom_search(a, b, f, 0, true, used, out, true);
  return !out.empty();
}

}  // namespace snalab
