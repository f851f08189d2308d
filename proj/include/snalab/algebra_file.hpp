#pragma once

#include <optional>
#include <string>

#include "snalab/sna.hpp"
#include "snalab/srl.hpp"
#include "snalab/twist.hpp"

namespace snalab {

// Algebra files are key/value text, '#' starts a comment:
//
//   kind: lattice | srl | sna
//   elements: 0 a b 1
//   covers: 0<a 0<b a<1 b<1
//   d_set: 0 1                  (srl only)
//   imp: <row of n names>       (sna tables, one line per row)
//   neg: <n names>              (sna tables)
//   twist_of: other.alg         (sna alternative; path relative to the file)
//   filter: a                   (optional with twist_of; upset generator)
//
// Repeated keys accumulate tokens. Unknown keys are rejected.
struct ParsedAlgebra {
  enum class Kind { Lattice, Srl, Sna };

  Kind kind = Kind::Lattice;
  std::optional<FiniteLattice> lattice;
  std::optional<Srl> srl;
  std::optional<SnaAlgebra> sna;
  std::optional<TwistAlgebra> twist;  // set when the sna came from twist_of
};

ParsedAlgebra parse_algebra_file(const std::string& path);
ParsedAlgebra parse_algebra_text(const std::string& text, const std::string& dir);

std::string serialize(const FiniteLattice& l);
std::string serialize(const Srl& s);
std::string serialize(const SnaAlgebra& t);

}  // namespace snalab
