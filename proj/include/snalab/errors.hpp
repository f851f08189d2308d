#pragma once

#include <stdexcept>
#include <string>

namespace snalab {

enum class Err {
  NotAPoset,
  NotALattice,
  NotDistributive,
  NotBounded,
  UnknownElement,
  NotASublattice,
  NoMaximum,
  UnboundVariable,
  EmptyGeneratorSet,
  NotOpenImplicative,
  NotACongruence,
  TooLarge,
  TrivialAlgebra,
  NotASubalgebra,
  NotSubresiduatedFilter,
  NotAHomomorphism,
  MultipleFixedPoints,
  NoCenter,
  NotInVariety,
  IdentityNotSatisfied,
  NotATwist,
  ParseError,
  ValidationError,
  Internal,
};

const char* to_string(Err e);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Err kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

}  // namespace snalab
