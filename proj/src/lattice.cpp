#include "snalab/lattice.hpp"

#include <algorithm>

namespace snalab {

const char* to_string(Err e) {
  switch (e) {
    case Err::NotAPoset: return "NotAPoset";
    case Err::NotALattice: return "NotALattice";
    case Err::NotDistributive: return "NotDistributive";
    case Err::NotBounded: return "NotBounded";
    case Err::UnknownElement: return "UnknownElement";
    case Err::NotASublattice: return "NotASublattice";
    case Err::NoMaximum: return "NoMaximum";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case Err::NotOpenImplicative: return "NotOpenImplicative";
    case Err::NotACongruence: return "NotACongruence";
    case Err::TooLarge: return "TooLarge";
    case Err::TrivialAlgebra: return "TrivialAlgebra";
    case Err::NotASubalgebra: return "NotASubalgebra";
    case Err::NotSubresiduatedFilter: return "NotSubresiduatedFilter";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::MultipleFixedPoints: return "MultipleFixedPoints";
    case Err::NoCenter: return "NoCenter";
    case Err::NotInVariety: return "NotInVariety";
    case Err::IdentityNotSatisfied: return "IdentityNotSatisfied";
    case Err::NotATwist: return "NotATwist";
    case Err::ParseError: return "ParseError";
    case Err::ValidationError: return "ValidationError";
    case Err::Internal: return "Internal";
  }
  return "Error";
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> names,
                                         const std::vector<std::pair<Elem, Elem>>& covers) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw AlgebraError(Err::ValidationError, "empty element list");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw AlgebraError(Err::ValidationError, "duplicate element name '" + names[i] + "'");

  std::vector<uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw AlgebraError(Err::UnknownElement, "cover pair references undeclared element");
    if (lo == hi)
      throw AlgebraError(Err::NotAPoset, "self-cover at '" + names[lo] + "'");
    leq[lo * n + hi] = 1;
  }
  // Reflexive-transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  return from_order(std::move(names), std::move(leq));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        std::vector<uint8_t> leq) {
  FiniteLattice L;
  const int n = static_cast<int>(names.size());
  if (n == 0) throw AlgebraError(Err::ValidationError, "empty element list");
  if (leq.size() != static_cast<size_t>(n) * n)
    throw AlgebraError(Err::ValidationError, "order table has wrong size");
  L.n_ = n;
  L.names_ = std::move(names);
  L.leq_ = std::move(leq);

  auto le = [&](Elem x, Elem y) { return L.leq_[x * n + y] != 0; };
  auto wit2 = [&](Elem x, Elem y) {
    return "(" + L.names_[x] + "," + L.names_[y] + ")";
  };

  for (int x = 0; x < n; ++x)
    if (!le(x, x)) throw AlgebraError(Err::NotAPoset, "order not reflexive at '" + L.names_[x] + "'");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && le(x, y) && le(y, x))
        throw AlgebraError(Err::NotAPoset, "cycle through " + wit2(x, y));
      for (int z = 0; z < n; ++z)
        if (le(x, y) && le(y, z) && !le(x, z))
          throw AlgebraError(Err::NotAPoset, "order not transitive at (" + L.names_[x] + "," +
                                                 L.names_[y] + "," + L.names_[z] + ")");
    }

  // Meet and join tables: greatest lower / least upper bounds, with the least
  // witness pair reported when a bound is missing.
  L.meet_.assign(n * n, -1);
  L.join_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem g = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(c, x) || !le(c, y)) continue;
        bool greatest = true;
        for (int z = 0; z < n; ++z)
          if (le(z, x) && le(z, y) && !le(z, c)) { greatest = false; break; }
        if (greatest) { g = c; break; }
      }
      if (g < 0) throw AlgebraError(Err::NotALattice, "no meet for " + wit2(x, y));
      L.meet_[x * n + y] = g;

      Elem s = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(x, c) || !le(y, c)) continue;
        bool least = true;
        for (int z = 0; z < n; ++z)
          if (le(x, z) && le(y, z) && !le(c, z)) { least = false; break; }
        if (least) { s = c; break; }
      }
      if (s < 0) throw AlgebraError(Err::NotALattice, "no join for " + wit2(x, y));
      L.join_[x * n + y] = s;
    }

  Elem bot = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bot = L.meet_[bot * n + x];
    top = L.join_[top * n + x];
  }
  L.bottom_ = bot;
  L.top_ = top;
  for (int x = 0; x < n; ++x)
    if (!le(bot, x) || !le(x, top))
      throw AlgebraError(Err::NotBounded, "bounds do not dominate '" + L.names_[x] + "'");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Elem lhs = L.meet_[x * n + L.join_[y * n + z]];
        Elem rhs = L.join_[L.meet_[x * n + y] * n + L.meet_[x * n + z]];
        if (lhs != rhs)
          throw AlgebraError(Err::NotDistributive, "witness (" + L.names_[x] + "," + L.names_[y] +
                                                       "," + L.names_[z] + ")");
      }
  return L;
}

Elem FiniteLattice::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw AlgebraError(Err::UnknownElement, "no element named '" + std::string(name) + "'");
}

bool FiniteLattice::is_chain() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (!leq_[x * n_ + y] && !leq_[y * n_ + x]) return false;
  return true;
}

bool FiniteLattice::is_sublattice(const ElemSet& s) const {
  if (s.universe() != n_)
    throw AlgebraError(Err::UnknownElement, "subset universe does not match lattice");
  if (!s.test(bottom_) || !s.test(top_)) return false;
  for (Elem x = 0; x < n_; ++x) {
    if (!s.test(x)) continue;
    for (Elem y = 0; y < n_; ++y) {
      if (!s.test(y)) continue;
      if (!s.test(meet(x, y)) || !s.test(join(x, y))) return false;
    }
  }
  return true;
}

ElemSet FiniteLattice::upset(Elem x) const {
  check(x);
  ElemSet s(n_);
  for (Elem y = 0; y < n_; ++y)
    if (leq_[x * n_ + y]) s.set(y);
  return s;
}

ElemSet FiniteLattice::downset(Elem x) const {
  check(x);
  ElemSet s(n_);
  for (Elem y = 0; y < n_; ++y)
    if (leq_[y * n_ + x]) s.set(y);
  return s;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (x == y || !leq_[x * n_ + y]) continue;
      bool direct = true;
      for (Elem z = 0; z < n_; ++z)
        if (z != x && z != y && leq_[x * n_ + z] && leq_[z * n_ + y]) { direct = false; break; }
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace snalab
