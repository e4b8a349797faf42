#ifndef BICROSS_BIALGEBRA_HPP
#define BICROSS_BIALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>

#include "bicross/morphism.hpp"

namespace bicross {

/// A presented algebra bundled with a coproduct (verified algebra
/// morphism into the tensor square), an optional counit and an optional
/// antipode. Non-counital bundles skip exactly the checks mentioning
/// epsilon, with logged SKIP lines.
class BialgebraStructure {
 public:
  BialgebraStructure(std::string label, PresPtr alg, AlgebraMorphism coproduct,
                     std::optional<Counit> counit = std::nullopt,
                     std::optional<AlgebraMorphism> antipode = std::nullopt);

  const std::string& label() const { return label_; }
  const PresPtr& alg() const { return alg_; }
  int order() const { return alg_->series_order(); }

  const AlgebraMorphism& coproduct() const { return coproduct_; }
  bool counital() const { return counit_.has_value(); }
  const Counit& counit() const;
  bool has_antipode() const { return antipode_.has_value(); }
  const AlgebraMorphism& antipode() const;
  bool hopf() const { return counital() && has_antipode(); }

  PresPtr square() const { return tensor_power(alg_, 2); }
  PresPtr cube() const { return tensor_power(alg_, 3); }

  Element delta(const Element& e) const { return coproduct_.apply(e); }

  /// Replaces the antipode/counit on a copy (used by solvers).
  BialgebraStructure with_counit(Counit eps) const;
  BialgebraStructure with_antipode(AlgebraMorphism s) const;

  /// Record of which axiom checks have run on this bundle.
  const std::map<std::string, Status>& checklist() const { return checklist_; }
  void record(const std::string& check, Status s) const;

 private:
  std::string label_;
  PresPtr alg_;
  AlgebraMorphism coproduct_;
  std::optional<Counit> counit_;
  std::optional<AlgebraMorphism> antipode_;
  mutable std::map<std::string, Status> checklist_;
};

/// m((left x right)(Delta(e))), with absent maps meaning the identity.
Element convolve(const BialgebraStructure& b, const AlgebraMorphism* left,
                 const AlgebraMorphism* right, const Element& e);

/// (Delta x id) Delta == (id x Delta) Delta on every generator; since both
/// sides are algebra morphisms, generator equality is conclusive. Random
/// words of degree <= extra_degree are sampled on top as a cross-check.
Report check_coassociativity(const BialgebraStructure& b, int extra_degree = 0,
                             std::uint64_t seed = 1);

/// (eps x id) Delta == id == (id x eps) Delta on generators; SKIPs with a
/// notice when the bundle is non-counital.
Report check_counit_axiom(const BialgebraStructure& b);

/// m(S x id)Delta == unit.eps == m(id x S)Delta on generators plus sampled
/// words. Throws ConfigError when the counit is missing.
Report check_antipode_axiom(const BialgebraStructure& b, int extra_degree = 0,
                            std::uint64_t seed = 2);

struct CocommutativityResult {
  bool cocommutative = true;
  std::vector<std::string> asymmetric_generators;
  Report detail;
};

CocommutativityResult check_cocommutativity(const BialgebraStructure& b);

/// Runs every check applicable to the bundle (morphism property is assumed
/// already verified at construction).
Report run_axiom_suite(const BialgebraStructure& b, int extra_degree = 0);

}  // namespace bicross

#endif
