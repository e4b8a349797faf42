#ifndef BICROSS_MORPHISM_HPP
#define BICROSS_MORPHISM_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bicross/element.hpp"
#include "bicross/report.hpp"

namespace bicross {

enum class Parity { kMultiplicative, kAntimultiplicative };

/// Linear (anti)multiplicative map fixed by generator images. Copies share
/// the word-image cache (a pure cache: results are identical with or
/// without it).
class AlgebraMorphism {
 public:
  AlgebraMorphism(std::string name, PresPtr domain, PresPtr codomain,
                  std::vector<Element> images,
                  Parity parity = Parity::kMultiplicative);

  const std::string& name() const { return name_; }
  const PresPtr& domain() const { return domain_; }
  const PresPtr& codomain() const { return codomain_; }
  Parity parity() const { return parity_; }
  const Element& image(GenId g) const { return images_.at(g); }

  /// Linear extension: words map to ordered products of images
  /// (reversed order when antimultiplicative); the unit maps to the unit.
  Element apply(const Element& e) const;
  Element apply_word(const Word& w) const;

  /// Checks the defining relations of the domain; a clean report marks
  /// the morphism verified.
  MorphismReport verify() const;
  bool verified() const { return state_->verified; }
  void require_verified() const;

 private:
  struct State {
    std::mutex mutex;
    std::map<Word, Element> cache;
    bool verified = false;
  };

  std::string name_;
  PresPtr domain_, codomain_;
  std::vector<Element> images_;
  Parity parity_;
  std::shared_ptr<State> state_;
};

/// Counit: an algebra morphism into the scalars, stored as one series per
/// generator.
class Counit {
 public:
  Counit(PresPtr domain, std::vector<Series> values);

  const PresPtr& domain() const { return domain_; }
  const Series& value(GenId g) const { return values_.at(g); }
  Series apply(const Element& e) const;
  Series apply_word(const Word& w) const;

  /// Multiplicativity against the domain relations.
  Report verify() const;

 private:
  PresPtr domain_;
  std::vector<Series> values_;
};

/// f applied on logical leg `leg` of X^{otimes m} (identity on the other
/// legs); f maps X into X^{otimes k}. Used for (Delta (x) id) etc.
AlgebraMorphism expand_leg(const PresPtr& x, int m, int leg,
                           const AlgebraMorphism& f, int k);

/// Counit contraction on one leg: X^{otimes m} -> X^{otimes (m-1)}.
AlgebraMorphism contract_leg(const PresPtr& x, int m, int leg,
                             const Counit& eps);

}  // namespace bicross

#endif
