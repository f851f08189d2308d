#pragma once

#include <optional>
#include <vector>

#include "snalab/sna.hpp"
#include "snalab/twist.hpp"

namespace snalab {

// The unique fixed point of ~ when it exists; two or more fixed points signal
// a broken table (MultipleFixedPoints).
std::optional<Elem> find_center(const SnaAlgebra& t);

struct CondResult {
  bool holds = true;
  std::pair<Elem, Elem> witness = {-1, -1};
};

// (CK): for x, y >= c with x ^ y <= c there is z with z v c = x, ~z v c = y.
CondResult check_ck(const SnaAlgebra& t);  // NoCenter
// (C): (x ^ y) -> 0 = 1 implies some z with z v c = x v c, ~z v c = y v c.
// Certified to agree with (CK).
CondResult check_c(const SnaAlgebra& t);  // NoCenter

struct CenterReport {
  std::optional<Elem> center;
  std::optional<CondResult> ck;
  std::optional<CondResult> c;
  std::optional<bool> rho_surjective;
};

// Computes everything above and certifies the equivalences
// ck <=> c <=> rho surjective on centered algebras.
CenterReport center_report(const SnaAlgebra& t);

struct TwistRepresentation {
  bool representable = false;
  std::string reason;                 // "center-missing" or "ck-fails" when not
  std::pair<Elem, Elem> ck_witness = {-1, -1};
  std::optional<Srl> witness_srl;     // A with T isomorphic to K(A)
  std::optional<RhoResult> iso;       // the verified isomorphism rho
};

// A subresiduated Nelson algebra is a full twist iff it has a center and
// satisfies (CK); on success the quotient together with rho realizes the
// isomorphism.
TwistRepresentation representable_as_twist(const SnaAlgebra& t);

}  // namespace snalab
