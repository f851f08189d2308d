#pragma once

#include <vector>

#include "snalab/elemset.hpp"

namespace snalab {

// Equivalence relation on {0..n-1} stored as a restricted growth string:
// block ids are numbered by first occurrence, so block k's least element
// precedes block k+1's least element.
struct Partition {
  std::vector<int> block;
  int blocks = 0;

  static Partition identity(int n) {
    Partition p;
    p.block.resize(n);
    for (int i = 0; i < n; ++i) p.block[i] = i;
    p.blocks = n;
    return p;
  }
  static Partition total(int n) {
    Partition p;
    p.block.assign(n, 0);
    p.blocks = n > 0 ? 1 : 0;
    return p;
  }
  // Renumbers arbitrary block labels into normalized form.
  static Partition normalize(const std::vector<int>& raw) {
    Partition p;
    p.block.assign(raw.size(), -1);
    std::vector<int> seen;
    for (size_t i = 0; i < raw.size(); ++i) {
      int id = -1;
      for (size_t k = 0; k < seen.size(); ++k)
        if (seen[k] == raw[i]) { id = static_cast<int>(k); break; }
      if (id < 0) {
        id = static_cast<int>(seen.size());
        seen.push_back(raw[i]);
      }
      p.block[i] = id;
    }
    p.blocks = static_cast<int>(seen.size());
    return p;
  }

  int size() const { return static_cast<int>(block.size()); }
  bool same(Elem x, Elem y) const { return block[x] == block[y]; }

  // Least element of each block, indexed by block id (ascending by normalization).
  std::vector<Elem> reps() const {
    std::vector<Elem> r(blocks, -1);
    for (int i = 0; i < size(); ++i)
      if (r[block[i]] < 0) r[block[i]] = i;
    return r;
  }

  // true iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const {
    std::vector<int> img(blocks, -1);
    for (int i = 0; i < size(); ++i) {
      int b = block[i];
      if (img[b] < 0)
        img[b] = coarser.block[i];
      else if (img[b] != coarser.block[i])
        return false;
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace snalab
