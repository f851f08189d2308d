#include "snalab/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace snalab {

Elem s_value(const SnaAlgebra& t, Elem x, Elem y) {
  Elem a = t.imp(x, y);
  Elem b = t.imp(y, x);
  Elem c = t.imp(t.neg(x), t.neg(y));
  Elem d = t.imp(t.neg(y), t.neg(x));
  return t.meet(t.meet(a, b), t.meet(c, d));
}

bool is_open_implicative_filter(const SnaAlgebra& t, const ElemSet& f) {
  const int n = t.size();
  if (f.universe() != n)
    throw AlgebraError(Err::UnknownElement, "filter universe does not match algebra");
  if (!f.test(t.top())) return false;
  for (Elem x = 0; x < n; ++x) {
    if (!f.test(x)) continue;
    if (!f.test(t.box(x))) return false;
    for (Elem y = 0; y < n; ++y)
      if (f.test(t.imp(x, y)) && !f.test(y)) return false;
  }
  return true;
}

std::vector<ElemSet> open_implicative_filters(const SnaAlgebra& t) {
  std::vector<ElemSet> out;
  for (Elem m = 0; m < t.size(); ++m) {
    ElemSet f = t.lattice().upset(m);
    if (is_open_implicative_filter(t, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet generate_oif(const SnaAlgebra& t, const ElemSet& x) {
  if (x.empty()) throw AlgebraError(Err::EmptyGeneratorSet, "generator set is empty");
  const int n = t.size();
  Elem z = -1;
  for (Elem e = 0; e < n; ++e)
    if (x.test(e)) z = z < 0 ? e : t.meet(z, e);
  ElemSet out(n);
  for (Elem y = 0; y < n; ++y)
    if (t.imp(t.box(z), y) == t.top()) out.set(y);

  // The formula must agree with the intersection of all open implicative
  // filters containing the generators.
  ElemSet meet_all = ElemSet::full(n);
  bool any = false;
  for (const ElemSet& f : open_implicative_filters(t)) {
    if (!x.subset_of(f)) continue;
    meet_all &= f;
    any = true;
  }
  if (!any || !(meet_all == out) || !is_open_implicative_filter(t, out))
    throw AlgebraError(Err::Internal, "generated filter disagrees with the intersection oracle");
  return out;
}

ElemSet extend_oif(const SnaAlgebra& t, const ElemSet& f, Elem x) {
  if (!is_open_implicative_filter(t, f))
    throw AlgebraError(Err::NotOpenImplicative, "base is not an open implicative filter");
  const int n = t.size();
  Elem least = t.top();
  for (Elem e = 0; e < n; ++e)
    if (f.test(e)) least = t.meet(least, e);
  ElemSet out(n);
  Elem base = t.meet(least, t.box(x));
  for (Elem y = 0; y < n; ++y)
    if (t.imp(base, y) == t.top()) out.set(y);
  ElemSet gen = f;
  gen.set(x);
  if (!(out == generate_oif(t, gen)))
    throw AlgebraError(Err::Internal, "extension formula disagrees with generate_oif");
  return out;
}

bool is_congruence(const SnaAlgebra& t, const Partition& p) {
  const int n = t.size();
  if (p.size() != n) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      if (!p.same(t.neg(x), t.neg(y))) return false;
      for (Elem z = 0; z < n; ++z)
        if (!p.same(t.meet(x, z), t.meet(y, z)) || !p.same(t.join(x, z), t.join(y, z)) ||
            !p.same(t.imp(x, z), t.imp(y, z)) || !p.same(t.imp(z, x), t.imp(z, y)))
          return false;
    }
  return true;
}

Partition theta_of_filter(const SnaAlgebra& t, const ElemSet& f) {
  if (!is_open_implicative_filter(t, f))
    throw AlgebraError(Err::NotOpenImplicative, "not an open implicative filter");
  const int n = t.size();
  std::vector<int> raw(n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < x; ++y)
      if (f.test(s_value(t, x, y))) { raw[x] = raw[y]; break; }
    if (raw[x] < 0) raw[x] = x;
  }
  Partition p = Partition::normalize(raw);
  // The s-term relation must itself match the block relation (transitivity).
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (p.same(x, y) != f.test(s_value(t, x, y)))
        throw AlgebraError(Err::Internal, "s-term relation is not transitive over the filter");
  if (!is_congruence(t, p))
    throw AlgebraError(Err::Internal, "Theta(F) is not a congruence");
  return p;
}

ElemSet filter_of_congruence(const SnaAlgebra& t, const Partition& p) {
  if (!is_congruence(t, p)) throw AlgebraError(Err::NotACongruence, "not a congruence");
  ElemSet f(t.size());
  for (Elem x = 0; x < t.size(); ++x)
    if (p.same(x, t.top())) f.set(x);
  if (!is_open_implicative_filter(t, f))
    throw AlgebraError(Err::Internal, "1-class is not an open implicative filter");
  return f;
}

namespace {

void enumerate_partitions(const SnaAlgebra& t, int next, std::vector<int>& block, int used,
                          std::vector<Partition>& out) {
  const int n = t.size();
  if (next == n) {
    Partition p;
    p.block = block;
    p.blocks = used;
    if (is_congruence(t, p)) out.push_back(p);
    return;
  }
  for (int b = 0; b <= used && b < n; ++b) {
    block[next] = b;
    enumerate_partitions(t, next + 1, block, b == used ? used + 1 : used, out);
  }
  block[next] = -1;
}

}  // namespace

std::vector<Partition> congruences_bruteforce(const SnaAlgebra& t, int guard) {
  const int n = t.size();
  if (n > guard)
    throw AlgebraError(Err::TooLarge, "partition oracle limited to " + std::to_string(guard) +
                                          " elements, got " + std::to_string(n));
  std::vector<int> block(n, -1);
  std::vector<Partition> out;
  enumerate_partitions(t, 0, block, 0, out);
  return out;
}

Partition congruence_closure(const SnaAlgebra& t,
                             const std::vector<std::pair<Elem, Elem>>& pairs) {
  const int n = t.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);
    parent[x] = y;
    return true;
  };
  for (auto [x, y] : pairs) unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (find(x) != find(y)) continue;
        if (unite(t.neg(x), t.neg(y))) changed = true;
        for (Elem z = 0; z < n; ++z) {
          if (unite(t.meet(x, z), t.meet(y, z))) changed = true;
          if (unite(t.join(x, z), t.join(y, z))) changed = true;
          if (unite(t.imp(x, z), t.imp(y, z))) changed = true;
          if (unite(t.imp(z, x), t.imp(z, y))) changed = true;
        }
      }
  }
  std::vector<int> raw(n);
  for (Elem x = 0; x < n; ++x) raw[x] = find(x);
  return Partition::normalize(raw);
}

bool in_principal(const SnaAlgebra& t, Elem x, Elem y, Elem z, Elem w) {
  return t.imp(s_value(t, x, y), s_value(t, z, w)) == t.top();
}

Partition principal_congruence(const SnaAlgebra& t, Elem x, Elem y) {
  const int n = t.size();
  std::vector<int> raw(n, -1);
  for (Elem z = 0; z < n; ++z) {
    for (Elem w = 0; w < z; ++w)
      if (in_principal(t, x, y, z, w)) { raw[z] = raw[w]; break; }
    if (raw[z] < 0) raw[z] = z;
  }
  Partition p = Partition::normalize(raw);
  if (!(p == congruence_closure(t, {{x, y}})))
    throw AlgebraError(Err::Internal,
                       "principal-congruence formula disagrees with the closure oracle");
  return p;
}

bool is_simple(const SnaAlgebra& t) {
  if (t.size() == 1) throw AlgebraError(Err::TrivialAlgebra, "one-element algebra");
  bool crit = true;
  for (Elem x = 0; x < t.size() && crit; ++x)
    if (x != t.top() && t.imp(t.box(x), t.bottom()) != t.top()) crit = false;
  bool by_filters = open_implicative_filters(t).size() == 2;
  if (crit != by_filters)
    throw AlgebraError(Err::Internal, "simplicity criterion disagrees with the filter count");
  return crit;
}

bool is_subdirectly_irreducible(const SnaAlgebra& t) {
  if (t.size() == 1) throw AlgebraError(Err::TrivialAlgebra, "one-element algebra");
  bool crit = false;
  for (Elem x = 0; x < t.size() && !crit; ++x) {
    if (x == t.top()) continue;
    bool all = true;
    for (Elem y = 0; y < t.size(); ++y)
      if (y != t.top() && t.imp(t.box(y), x) != t.top()) { all = false; break; }
    crit = all;
  }
  // Equivalent formulation: the nonidentity congruences, i.e. the filters
  // other than {1}, have a least member.
  std::vector<ElemSet> fs = open_implicative_filters(t);
  ElemSet unit = ElemSet::of(t.size(), {t.top()});
  std::vector<ElemSet> proper;
  for (const auto& f : fs)
    if (!(f == unit)) proper.push_back(f);
  bool by_filters = false;
  for (const auto& cand : proper) {
    bool least = true;
    for (const auto& other : proper)
      if (!cand.subset_of(other)) { least = false; break; }
    if (least) { by_filters = true; break; }
  }
  if (crit != by_filters)
    throw AlgebraError(Err::Internal, "SI criterion disagrees with the filter lattice");
  return crit;
}

Verdict check_cep(const SnaAlgebra& t, const ElemSet& carrier, const Partition& p) {
  auto [u, emb] = subalgebra_with_map(t, carrier);
  if (!is_congruence(u, p))
    throw AlgebraError(Err::NotACongruence, "input is not a congruence of the subalgebra");

  // 1-class of p, as parent elements; its generated filter gives the
  // generated congruence of the parent.
  ElemSet one_class(t.size());
  for (Elem i = 0; i < u.size(); ++i)
    if (p.same(i, u.top())) one_class.set(emb[i]);
  ElemSet ext_filter = generate_oif(t, one_class);
  Partition ext = theta_of_filter(t, ext_filter);

  // Independent route: close the pair set under the parent's tables.
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < u.size(); ++i)
    for (Elem j = 0; j < u.size(); ++j)
      if (p.same(i, j)) pairs.emplace_back(emb[i], emb[j]);
  if (!(ext == congruence_closure(t, pairs)))
    throw AlgebraError(Err::Internal, "filter-generated extension disagrees with closure");

  Verdict v;
  for (Elem i = 0; i < u.size(); ++i)
    for (Elem j = 0; j < u.size(); ++j)
      if (ext.same(emb[i], emb[j]) != p.same(i, j)) {
        v.failures.push_back({"cep-restriction", {emb[i], emb[j]}, -1, -1});
        return v;
      }
  return v;
}

}  // namespace snalab
