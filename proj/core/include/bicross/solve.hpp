#ifndef BICROSS_SOLVE_HPP
#define BICROSS_SOLVE_HPP

#include <optional>
#include <variant>

#include "bicross/bialgebra.hpp"

namespace bicross {

/// Witness that no counit can exist: replaying the attempted values on the
/// witness relation reproduces a nonzero scalar contradiction.
struct ObstructionCertificate {
  std::string relation;          // e.g. "[P1,x1] = 1"
  std::string derived_equation;  // e.g. "0 = 1"
  PresPtr alg;
  std::vector<Series> attempted;          // eps values at the point of failure
  std::optional<std::pair<GenId, GenId>> rule;  // witness rule (hi, lo)
  std::string axiom_witness;  // set instead of `rule` for axiom obstructions
};

/// Recomputes eps(relation lhs) - eps(relation rhs) with the attempted
/// values; nonzero by construction. Only rule-witnessed certificates
/// carry a scalar replay.
Series replay(const ObstructionCertificate& cert);

struct CounitFreeParameters {
  std::vector<std::string> parameters;  // "eps(<gen>) at h^k"
  std::vector<Series> particular;       // the all-zero-free-choice solution
};

using SolveCounitResult =
    std::variant<Counit, ObstructionCertificate, CounitFreeParameters>;

/// Solves eps on generators order-by-order in h from (a) eps(remainder)=0
/// for every rewrite rule and (b) the counit axiom for the given coproduct.
/// The per-order systems are linear once the h^0 stage is pinned; the
/// solver requires the h^0 coproduct part to be primitive or
/// half-primitive (every catalog coproduct is). Passing no coproduct
/// solves from the relations alone.
SolveCounitResult solve_counit(const PresPtr& alg,
                               const AlgebraMorphism* coproduct);

struct AntipodeFailure {
  std::string reason;
  Report detail;
};

using SolveAntipodeResult = std::variant<AlgebraMorphism, AntipodeFailure>;

/// Convolution inverse of the identity, order-by-order in h; the h^0
/// coproduct part must be primitive (antipode -g). The result is
/// verified as an antimultiplicative morphism and against the antipode
/// axiom before being returned.
SolveAntipodeResult solve_antipode(const BialgebraStructure& b);

}  // namespace bicross

#endif
