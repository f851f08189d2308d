#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace snalab {

using Elem = int;

// Subset of a fixed element universe, packed into 64-bit words.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElemSet of(int universe, std::initializer_list<Elem> xs) {
    ElemSet s(universe);
    for (Elem x : xs) s.set(x);
    return s;
  }
  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (Elem x = 0; x < universe; ++x) s.set(x);
    return s;
  }

  int universe() const { return n_; }
  bool test(Elem x) const { return (w_[x >> 6] >> (x & 63)) & 1u; }
  void set(Elem x) { w_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void reset(Elem x) { w_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  // Least member, -1 if empty.
  Elem min() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<Elem>(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < n_; ++x)
      if (test(x)) out.push_back(x);
    return out;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  // Orders by cardinality, then by least differing element; used for stable report order.
  friend bool operator<(const ElemSet& a, const ElemSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (Elem x = 0; x < a.n_; ++x) {
      if (a.test(x) != b.test(x)) return a.test(x);
    }
    return false;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace snalab
