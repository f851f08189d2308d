#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snalab/elemset.hpp"
#include "snalab/errors.hpp"

namespace snalab {

// Finite bounded distributive lattice over dense element indices.
// All tables are precomputed and validated at construction; instances are
// immutable afterwards and safe to share across threads.
class FiniteLattice {
 public:
  // Builds from a Hasse diagram: leq is the reflexive-transitive closure of
  // the cover pairs (low, high). Throws NotAPoset / NotALattice /
  // NotDistributive / NotBounded with the least witness tuple.
  static FiniteLattice from_covers(std::vector<std::string> names,
                                   const std::vector<std::pair<Elem, Elem>>& covers);

  // Builds from an explicit order relation (row-major n*n, leq[x*n+y]).
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<uint8_t> leq);

  int size() const { return n_; }
  bool is_trivial() const { return n_ == 1; }

  bool leq(Elem x, Elem y) const {
    check(x); check(y);
    return leq_[x * n_ + y] != 0;
  }
  Elem meet(Elem x, Elem y) const {
    check(x); check(y);
    return meet_[x * n_ + y];
  }
  Elem join(Elem x, Elem y) const {
    check(x); check(y);
    return join_[x * n_ + y];
  }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  const std::string& name(Elem x) const {
    check(x);
    return names_[x];
  }
  const std::vector<std::string>& names() const { return names_; }
  // Throws UnknownElement when the name is not declared.
  Elem index_of(std::string_view name) const;

  // true iff leq is total.
  bool is_chain() const;

  // true iff s contains both bounds and is closed under meet and join.
  bool is_sublattice(const ElemSet& s) const;

  ElemSet upset(Elem x) const;
  ElemSet downset(Elem x) const;

  // Cover pairs (low, high) re-extracted from leq, sorted by index.
  std::vector<std::pair<Elem, Elem>> covers() const;

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

  // Empty placeholder; every populated instance comes from a from_* builder.
  FiniteLattice() = default;

 private:
  void check(Elem x) const {
    if (x < 0 || x >= n_)
      throw AlgebraError(Err::UnknownElement, "element index " + std::to_string(x) +
                                                  " out of range");
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

}  // namespace snalab
