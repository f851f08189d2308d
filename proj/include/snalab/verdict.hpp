#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snalab/elemset.hpp"

namespace snalab {

// One failed law: the witness is the least failing tuple in element-index
// order; lhs/rhs hold the two evaluated sides when that is meaningful.
struct Failure {
  std::string law;
  std::vector<Elem> witness;
  Elem lhs = -1;
  Elem rhs = -1;
};

struct Verdict {
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
  const Failure* find(std::string_view law) const {
    for (const auto& f : failures)
      if (f.law == law) return &f;
    return nullptr;
  }
};

}  // namespace snalab
