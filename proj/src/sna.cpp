#include "snalab/sna.hpp"

#include <algorithm>

namespace snalab {

SnaAlgebra SnaAlgebra::from_tables(FiniteLattice lattice, std::vector<Elem> imp,
                                   std::vector<Elem> neg) {
  const int n = lattice.size();
  if (imp.size() != static_cast<size_t>(n) * n)
    throw AlgebraError(Err::ValidationError, "implication table has wrong size");
  if (neg.size() != static_cast<size_t>(n))
    throw AlgebraError(Err::ValidationError, "negation table has wrong size");
  for (Elem v : imp)
    if (v < 0 || v >= n) throw AlgebraError(Err::ValidationError, "implication entry out of range");
  for (Elem v : neg)
    if (v < 0 || v >= n) throw AlgebraError(Err::ValidationError, "negation entry out of range");
  SnaAlgebra t;
  t.lat_ = std::move(lattice);
  t.imp_ = std::move(imp);
  t.neg_ = std::move(neg);
  return t;
}

namespace {

// Scans assignments in index-lexicographic order and records the least
// witness per law; `push` returns false once the law already failed.
struct Collector {
  Verdict& v;
  bool record(const std::string& law, std::vector<Elem> w, Elem lhs, Elem rhs) {
    if (v.find(law)) return false;
    v.failures.push_back({law, std::move(w), lhs, rhs});
    return true;
  }
};

void kleene_axioms(const SnaAlgebra& t, Verdict& v) {
  const int n = t.size();
  Collector c{v};
  for (Elem x = 0; x < n; ++x) {
    Elem lhs = t.neg(t.neg(x));
    if (lhs != x) { c.record("Ne1", {x}, lhs, x); break; }
  }
  for (Elem x = 0; x < n && !v.find("Ne2"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.neg(t.meet(x, y));
      Elem rhs = t.join(t.neg(x), t.neg(y));
      if (lhs != rhs) { c.record("Ne2", {x, y}, lhs, rhs); break; }
    }
  for (Elem x = 0; x < n && !v.find("Ne3"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem a = t.meet(x, t.neg(x));
      Elem lhs = t.meet(a, t.join(y, t.neg(y)));
      if (lhs != a) { c.record("Ne3", {x, y}, lhs, a); break; }
    }
}

}  // namespace

Verdict verify_kleene(const SnaAlgebra& t) {
  Verdict v;
  kleene_axioms(t, v);
  return v;
}

Verdict verify_nelson(const SnaAlgebra& t) {
  Verdict v;
  kleene_axioms(t, v);
  const int n = t.size();
  Collector c{v};

  for (Elem x = 0; x < n; ++x) {
    Elem lhs = t.imp(x, x);
    if (lhs != t.top()) { c.record("Ne4", {x}, lhs, t.top()); break; }
  }
  for (Elem x = 0; x < n && !v.find("Ne5"); ++x)
    for (Elem y = 0; y < n && !v.find("Ne5"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(x, t.imp(y, z));
        Elem rhs = t.imp(t.meet(x, y), z);
        if (lhs != rhs) { c.record("Ne5", {x, y, z}, lhs, rhs); break; }
      }
  for (Elem x = 0; x < n && !v.find("Ne6"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.meet(x, t.imp(x, y));
      Elem rhs = t.meet(x, t.join(t.neg(x), y));
      if (lhs != rhs) { c.record("Ne6", {x, y}, lhs, rhs); break; }
    }
  // Ne7 in the Monteiro form implied by Ne6 over a distributive lattice.
  for (Elem x = 0; x < n && !v.find("Ne7"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.meet(x, t.imp(x, y));
      Elem rhs = t.join(t.neg(x), y);
      if (!t.leq(lhs, rhs)) { c.record("Ne7", {x, y}, lhs, rhs); break; }
    }
  for (Elem x = 0; x < n && !v.find("Ne8"); ++x)
    for (Elem y = 0; y < n && !v.find("Ne8"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(x, t.meet(y, z));
        Elem rhs = t.meet(t.imp(x, y), t.imp(x, z));
        if (lhs != rhs) { c.record("Ne8", {x, y, z}, lhs, rhs); break; }
      }
  return v;
}

Verdict verify_sna(const SnaAlgebra& t) {
  Verdict v;
  kleene_axioms(t, v);
  const int n = t.size();
  Collector c{v};

  // sna1: (x \/ y) -> z = (x->z) /\ (y->z)
  for (Elem x = 0; x < n && !v.find("sna1"); ++x)
    for (Elem y = 0; y < n && !v.find("sna1"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(t.join(x, y), z);
        Elem rhs = t.meet(t.imp(x, z), t.imp(y, z));
        if (lhs != rhs) { c.record("sna1", {x, y, z}, lhs, rhs); break; }
      }
  // sna2: z -> (x /\ y) = (z->x) /\ (z->y)
  for (Elem x = 0; x < n && !v.find("sna2"); ++x)
    for (Elem y = 0; y < n && !v.find("sna2"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(z, t.meet(x, y));
        Elem rhs = t.meet(t.imp(z, x), t.imp(z, y));
        if (lhs != rhs) { c.record("sna2", {x, y, z}, lhs, rhs); break; }
      }
  // sna3: ((x->y) /\ (y->z)) -> (x->z) = 1
  for (Elem x = 0; x < n && !v.find("sna3"); ++x)
    for (Elem y = 0; y < n && !v.find("sna3"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(t.meet(t.imp(x, y), t.imp(y, z)), t.imp(x, z));
        if (lhs != t.top()) { c.record("sna3", {x, y, z}, lhs, t.top()); break; }
      }
  // sna4: x -> x = 1
  for (Elem x = 0; x < n; ++x) {
    Elem lhs = t.imp(x, x);
    if (lhs != t.top()) { c.record("sna4", {x}, lhs, t.top()); break; }
  }
  // sna5: x /\ (x->y) <= x /\ (~x \/ y)
  for (Elem x = 0; x < n && !v.find("sna5"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.meet(x, t.imp(x, y));
      Elem rhs = t.meet(x, t.join(t.neg(x), y));
      if (!t.leq(lhs, rhs)) { c.record("sna5", {x, y}, lhs, rhs); break; }
    }
  // sna6: x->y <= z -> (x->y)
  for (Elem x = 0; x < n && !v.find("sna6"); ++x)
    for (Elem y = 0; y < n && !v.find("sna6"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(x, y);
        Elem rhs = t.imp(z, lhs);
        if (!t.leq(lhs, rhs)) { c.record("sna6", {x, y, z}, lhs, rhs); break; }
      }
  // sna7: ~(x->y) -> (x /\ ~y) = 1
  for (Elem x = 0; x < n && !v.find("sna7"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.imp(t.neg(t.imp(x, y)), t.meet(x, t.neg(y)));
      if (lhs != t.top()) { c.record("sna7", {x, y}, lhs, t.top()); break; }
    }
  // sna8: (x /\ ~y) -> ~(x->y) = 1
  for (Elem x = 0; x < n && !v.find("sna8"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.imp(t.meet(x, t.neg(y)), t.neg(t.imp(x, y)));
      if (lhs != t.top()) { c.record("sna8", {x, y}, lhs, t.top()); break; }
    }
  return v;
}

Verdict derived_properties_suite(const SnaAlgebra& t) {
  if (!verify_sna(t).pass())
    throw AlgebraError(Err::ValidationError,
                       "derived properties require an algebra passing the sna verifier");
  Verdict v;
  const int n = t.size();
  Collector c{v};
  const Elem one = t.top();

  // box x <= x
  for (Elem x = 0; x < n; ++x)
    if (!t.leq(t.box(x), x)) { c.record("box-decreasing", {x}, t.box(x), x); break; }

  // x <= y implies z->x <= z->y and y->z <= x->z
  for (Elem x = 0; x < n && !v.find("imp-monotone"); ++x)
    for (Elem y = 0; y < n && !v.find("imp-monotone"); ++y) {
      if (!t.leq(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (!t.leq(t.imp(z, x), t.imp(z, y)) || !t.leq(t.imp(y, z), t.imp(x, z))) {
          c.record("imp-monotone", {x, y, z}, -1, -1);
          break;
        }
    }

  // x <= y implies x->y = 1
  for (Elem x = 0; x < n && !v.find("leq-gives-unit"); ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.leq(x, y) && t.imp(x, y) != one) { c.record("leq-gives-unit", {x, y}, t.imp(x, y), one); break; }

  // (x /\ (x->y)) -> y = 1
  for (Elem x = 0; x < n && !v.find("modus-ponens-unit"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.imp(t.meet(x, t.imp(x, y)), y);
      if (lhs != one) { c.record("modus-ponens-unit", {x, y}, lhs, one); break; }
    }

  // x->y = 1 implies x = x /\ (~x \/ y)
  for (Elem x = 0; x < n && !v.find("unit-absorption"); ++x)
    for (Elem y = 0; y < n; ++y) {
      if (t.imp(x, y) != one) continue;
      Elem rhs = t.meet(x, t.join(t.neg(x), y));
      if (x != rhs) { c.record("unit-absorption", {x, y}, x, rhs); break; }
    }

  // x->y = 1 and ~y->~x = 1 imply x <= y
  for (Elem x = 0; x < n && !v.find("unit-pair-order"); ++x)
    for (Elem y = 0; y < n; ++y) {
      if (t.imp(x, y) != one || t.imp(t.neg(y), t.neg(x)) != one) continue;
      if (!t.leq(x, y)) { c.record("unit-pair-order", {x, y}, x, y); break; }
    }

  // x->y = 1 and y->z = 1 imply x->z = 1
  for (Elem x = 0; x < n && !v.find("unit-transitive"); ++x)
    for (Elem y = 0; y < n && !v.find("unit-transitive"); ++y)
      for (Elem z = 0; z < n; ++z) {
        if (t.imp(x, y) != one || t.imp(y, z) != one) continue;
        if (t.imp(x, z) != one) { c.record("unit-transitive", {x, y, z}, t.imp(x, z), one); break; }
      }

  // x->y = 1 implies (x/\z)->(y/\z) = 1 and (x\/z)->(y\/z) = 1
  for (Elem x = 0; x < n && !v.find("unit-meet-join"); ++x)
    for (Elem y = 0; y < n && !v.find("unit-meet-join"); ++y) {
      if (t.imp(x, y) != one) continue;
      for (Elem z = 0; z < n; ++z)
        if (t.imp(t.meet(x, z), t.meet(y, z)) != one ||
            t.imp(t.join(x, z), t.join(y, z)) != one) {
          c.record("unit-meet-join", {x, y, z}, -1, one);
          break;
        }
    }

  // x->y = 1 implies (y->z)->(x->z) = 1 and (z->x)->(z->y) = 1
  for (Elem x = 0; x < n && !v.find("unit-imp-compat"); ++x)
    for (Elem y = 0; y < n && !v.find("unit-imp-compat"); ++y) {
      if (t.imp(x, y) != one) continue;
      for (Elem z = 0; z < n; ++z)
        if (t.imp(t.imp(y, z), t.imp(x, z)) != one ||
            t.imp(t.imp(z, x), t.imp(z, y)) != one) {
          c.record("unit-imp-compat", {x, y, z}, -1, one);
          break;
        }
    }

  // x->(y->z) <= (x->y)->(x->z)
  for (Elem x = 0; x < n && !v.find("imp-self-distrib"); ++x)
    for (Elem y = 0; y < n && !v.find("imp-self-distrib"); ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = t.imp(x, t.imp(y, z));
        Elem rhs = t.imp(t.imp(x, y), t.imp(x, z));
        if (!t.leq(lhs, rhs)) { c.record("imp-self-distrib", {x, y, z}, lhs, rhs); break; }
      }

  // (x->v) -> ((y->w)->z) = (y->w) -> ((x->v)->z); both outer arguments range
  // over the image of ->, so the scan runs over image elements.
  {
    ElemSet img(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) img.set(t.imp(x, y));
    auto imgs = img.elements();
    bool done = false;
    for (Elem u : imgs) {
      for (Elem w : imgs) {
        for (Elem z = 0; z < n; ++z) {
          Elem lhs = t.imp(u, t.imp(w, z));
          Elem rhs = t.imp(w, t.imp(u, z));
          if (lhs != rhs) { c.record("imp-exchange", {u, w, z}, lhs, rhs); done = true; break; }
        }
        if (done) break;
      }
      if (done) break;
    }
  }

  // box(x->y) = x->y
  for (Elem x = 0; x < n && !v.find("box-imp-fixpoint"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem e = t.imp(x, y);
      if (t.box(e) != e) { c.record("box-imp-fixpoint", {x, y}, t.box(e), e); break; }
    }

  // box y <= x -> (x /\ y)
  for (Elem x = 0; x < n && !v.find("box-meet-adjoint"); ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem lhs = t.box(y);
      Elem rhs = t.imp(x, t.meet(x, y));
      if (!t.leq(lhs, rhs)) { c.record("box-meet-adjoint", {x, y}, lhs, rhs); break; }
    }

  // box x <= ~x -> 0
  for (Elem x = 0; x < n; ++x) {
    Elem lhs = t.box(x);
    Elem rhs = t.imp(t.neg(x), t.bottom());
    if (!t.leq(lhs, rhs)) { c.record("box-neg-zero", {x}, lhs, rhs); break; }
  }

  return v;
}

SnaAlgebra product(const SnaAlgebra& a, const SnaAlgebra& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  auto id = [&](Elem x, Elem y) { return x * nb + y; };
  std::vector<std::string> names(n);
  std::vector<uint8_t> leq(n * n, 0);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1) {
      names[id(x1, y1)] = "(" + a.name(x1) + ";" + b.name(y1) + ")";
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          if (a.leq(x1, x2) && b.leq(y1, y2)) leq[id(x1, y1) * n + id(x2, y2)] = 1;
    }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(leq));
  std::vector<Elem> imp(n * n), neg(n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1) {
      neg[id(x1, y1)] = id(a.neg(x1), b.neg(y1));
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          imp[id(x1, y1) * n + id(x2, y2)] = id(a.imp(x1, x2), b.imp(y1, y2));
    }
  return SnaAlgebra::from_tables(std::move(L), std::move(imp), std::move(neg));
}

std::pair<SnaAlgebra, std::vector<Elem>> subalgebra_with_map(const SnaAlgebra& t,
                                                             const ElemSet& carrier) {
  const int n = t.size();
  if (carrier.universe() != n)
    throw AlgebraError(Err::UnknownElement, "carrier universe does not match algebra");
  if (!carrier.test(t.bottom()) || !carrier.test(t.top()))
    throw AlgebraError(Err::NotASubalgebra, "carrier misses a bound");
  for (Elem x = 0; x < n; ++x) {
    if (!carrier.test(x)) continue;
    if (!carrier.test(t.neg(x)))
      throw AlgebraError(Err::NotASubalgebra, "carrier not closed under ~ at " + t.name(x));
    for (Elem y = 0; y < n; ++y) {
      if (!carrier.test(y)) continue;
      if (!carrier.test(t.meet(x, y)) || !carrier.test(t.join(x, y)) ||
          !carrier.test(t.imp(x, y)))
        throw AlgebraError(Err::NotASubalgebra,
                           "carrier not closed at (" + t.name(x) + "," + t.name(y) + ")");
    }
  }
  std::vector<Elem> emb = carrier.elements();
  const int m = static_cast<int>(emb.size());
  std::vector<int> back(n, -1);
  for (int i = 0; i < m; ++i) back[emb[i]] = i;
  std::vector<std::string> names(m);
  std::vector<uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i) {
    names[i] = t.name(emb[i]);
    for (int j = 0; j < m; ++j) leq[i * m + j] = t.leq(emb[i], emb[j]) ? 1 : 0;
  }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(leq));
  std::vector<Elem> imp(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = back[t.neg(emb[i])];
    for (int j = 0; j < m; ++j) imp[i * m + j] = back[t.imp(emb[i], emb[j])];
  }
  return {SnaAlgebra::from_tables(std::move(L), std::move(imp), std::move(neg)), emb};
}

SnaAlgebra subalgebra(const SnaAlgebra& t, const ElemSet& carrier) {
  return subalgebra_with_map(t, carrier).first;
}

std::vector<ElemSet> subuniverses(const SnaAlgebra& t, int guard) {
  const int n = t.size();
  if (n > guard)
    throw AlgebraError(Err::TooLarge, "subuniverse scan limited to " + std::to_string(guard) +
                                          " elements, got " + std::to_string(n));
  std::vector<Elem> rest;
  for (Elem x = 0; x < n; ++x)
    if (x != t.bottom() && x != t.top()) rest.push_back(x);
  std::vector<ElemSet> out;
  const int k = static_cast<int>(rest.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k); ++bits) {
    ElemSet s(n);
    s.set(t.bottom());
    s.set(t.top());
    for (int i = 0; i < k; ++i)
      if ((bits >> i) & 1) s.set(rest[i]);
    bool closed = true;
    for (Elem x = 0; x < n && closed; ++x) {
      if (!s.test(x)) continue;
      if (!s.test(t.neg(x))) { closed = false; break; }
      for (Elem y = 0; y < n; ++y) {
        if (!s.test(y)) continue;
        if (!s.test(t.meet(x, y)) || !s.test(t.join(x, y)) || !s.test(t.imp(x, y))) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SnaAlgebra quotient_algebra(const SnaAlgebra& t, const Partition& p) {
  const int n = t.size();
  if (p.size() != n) throw AlgebraError(Err::NotACongruence, "partition size mismatch");
  // Well-definedness: each operation must factor through the blocks.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      if (!p.same(t.neg(x), t.neg(y)))
        throw AlgebraError(Err::NotACongruence, "~ not compatible at (" + t.name(x) + "," + t.name(y) + ")");
      for (Elem z = 0; z < n; ++z) {
        if (!p.same(t.meet(x, z), t.meet(y, z)) || !p.same(t.join(x, z), t.join(y, z)) ||
            !p.same(t.imp(x, z), t.imp(y, z)) || !p.same(t.imp(z, x), t.imp(z, y)))
          throw AlgebraError(Err::NotACongruence,
                             "operation not compatible at (" + t.name(x) + "," + t.name(y) + ")");
      }
    }
  const int m = p.blocks;
  std::vector<Elem> rep = p.reps();
  std::vector<std::string> names(m);
  std::vector<uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i) {
    names[i] = t.name(rep[i]);
    for (int j = 0; j < m; ++j)
      leq[i * m + j] = p.same(t.meet(rep[i], rep[j]), rep[i]) ? 1 : 0;
  }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(leq));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (L.meet(i, j) != p.block[t.meet(rep[i], rep[j])] ||
          L.join(i, j) != p.block[t.join(rep[i], rep[j])])
        throw AlgebraError(Err::Internal, "quotient lattice tables disagree with induced ops");
    }
  std::vector<Elem> imp(m * m), neg(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = p.block[t.neg(rep[i])];
    for (int j = 0; j < m; ++j) imp[i * m + j] = p.block[t.imp(rep[i], rep[j])];
  }
  return SnaAlgebra::from_tables(std::move(L), std::move(imp), std::move(neg));
}

Verdict check_sna_hom(const SnaAlgebra& src, const SnaAlgebra& dst, const HomMap& f) {
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
  for (Elem x = 0; x < n && v.pass(); ++x) {
    if (f[src.neg(x)] != dst.neg(f[x])) {
      v.failures.push_back({"hom-neg", {x}, f[src.neg(x)], dst.neg(f[x])});
      break;
    }
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
  }
  return v;
}

namespace {

void sna_hom_search(const SnaAlgebra& A, const SnaAlgebra& B, HomMap& f, Elem next,
                    bool bijective, std::vector<uint8_t>& used, std::vector<HomMap>& out,
                    bool stop_at_first) {
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
    for (Elem i = 0; i <= next && ok; ++i) {
      Elem ni = A.neg(i);
      if (ni <= next && f[ni] != B.neg(f[i])) ok = false;
      for (Elem j = 0; j <= next && ok; ++j) {
        Elem m = A.meet(i, j), jn = A.join(i, j), im = A.imp(i, j);
        if (m <= next && f[m] != B.meet(f[i], f[j])) ok = false;
        if (jn <= next && f[jn] != B.join(f[i], f[j])) ok = false;
        if (im <= next && f[im] != B.imp(f[i], f[j])) ok = false;
      }
    }
    if (ok) {
      if (bijective) used[w] = 1;
      sna_hom_search(A, B, f, next + 1, bijective, used, out, stop_at_first);
      if (bijective) used[w] = 0;
      if (stop_at_first && !out.empty()) { f[next] = -1; return; }
    }
    f[next] = -1;
  }
}

}  // namespace

std::vector<HomMap> homomorphisms(const SnaAlgebra& src, const SnaAlgebra& dst) {
  HomMap f(src.size(), -1);
  std::vector<uint8_t> used(dst.size(), 0);
  std::vector<HomMap> out;
  sna_hom_search(src, dst, f, 0, false, used, out, false);
  std::vector<HomMap> verified;
  for (auto& h : out)
    if (check_sna_hom(src, dst, h).pass()) verified.push_back(h);
  return verified;
}

bool is_isomorphic(const SnaAlgebra& a, const SnaAlgebra& b) {
  if (a.size() != b.size()) return false;
  HomMap f(a.size(), -1);
  std::vector<uint8_t> used(b.size(), 0);
  std::vector<HomMap> out;
  sna_hom_search(a, b, f, 0, true, used, out, true);
  return !out.empty();
}

bool hom_injective(const HomMap& f) {
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      if (f[i] == f[j]) return false;
  return true;
}

bool hom_surjective(const HomMap& f, int dst_size) {
  std::vector<uint8_t> hit(dst_size, 0);
  for (Elem x : f) hit[x] = 1;
  for (uint8_t h : hit)
    if (!h) return false;
  return true;
}

}  // namespace snalab
