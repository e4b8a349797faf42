#ifndef BICROSS_COACTION_HPP
#define BICROSS_COACTION_HPP

#include "bicross/action.hpp"

namespace bicross {

/// Left coaction beta : H -> A (x) H of a bialgebra A on a coalgebra H,
/// given on generators. Extension to products is either trivial
/// (beta(L) = 1 (x) L termwise) or via the bicrossproduct compatibility
/// condition (B):
///   beta(L.M) = (L^(-1) <| M_(1)) (M_(2))^(-1)  (x)  L^(0) (M_(2))^(0),
/// which needs the associated right action.
class LeftCoaction {
 public:
  enum class Extension { kTrivial, kBicrossB };

  /// Trivial coaction.
  LeftCoaction(std::string name, BundlePtr coacting, BundlePtr comodule);
  /// Generator table + condition-(B) extension.
  LeftCoaction(std::string name, BundlePtr coacting, BundlePtr comodule,
               std::map<GenId, Element> table,
               std::shared_ptr<const RightAction> action);

  const std::string& name() const { return name_; }
  const BundlePtr& coacting() const { return coacting_; }   // A
  const BundlePtr& comodule() const { return comodule_; }   // H
  Extension extension() const { return extension_; }
  /// A (x) H, where coaction values live.
  const PresPtr& tensor_ah() const { return ah_; }

  Element coact(const Element& l) const;
  Element coact_word(const Word& w) const;

  /// Comodule-coalgebra conditions; checks whose counit is absent are
  /// SKIPped with a notice.
  CoactionReport verify(int degree = 2, std::uint64_t seed = 5) const;
  bool verified() const { return cache_->verified; }
  void require_verified() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Word, Element> memo;
    bool verified = false;
  };

  std::string name_;
  BundlePtr coacting_, comodule_;
  std::map<GenId, Element> table_;
  Extension extension_;
  std::shared_ptr<const RightAction> action_;
  PresPtr ah_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace bicross

#endif
