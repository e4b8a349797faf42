#ifndef BICROSS_ACTION_HPP
#define BICROSS_ACTION_HPP

#include <map>
#include <memory>

#include "bicross/bialgebra.hpp"

namespace bicross {

using BundlePtr = std::shared_ptr<const BialgebraStructure>;

/// Right module action of a counital bialgebra H on an algebra A, given on
/// generator pairs and extended by
///   (f.g) <| L = (f <| L_(1)) . (g <| L_(2)),   f <| (L.M) = (f <| L) <| M,
///   1 <| L = eps_H(L) 1,                        f <| 1 = f.
class RightAction {
 public:
  RightAction(std::string name, PresPtr module_alg, BundlePtr acting,
              std::map<std::pair<GenId, GenId>, Element> table);

  const std::string& name() const { return name_; }
  const PresPtr& module_alg() const { return module_alg_; }
  const BundlePtr& acting() const { return acting_; }
  const Element& table_entry(GenId a_gen, GenId h_gen) const;

  Element act(const Element& f, const Element& l) const;
  Element act_word(const Word& f, const Word& l) const;

  /// Module-algebra law against H relations, A relations and unit laws.
  ActionReport verify(int degree = 2, std::uint64_t seed = 3) const;
  bool verified() const { return cache_->verified; }
  void require_verified() const;

 private:
  Element act_gen(const Element& f, GenId h_gen) const;
  Element act_word_gen(const Word& f, GenId h_gen) const;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Word, Word>, Element> memo;
    bool verified = false;
  };

  std::string name_;
  PresPtr module_alg_;
  BundlePtr acting_;
  std::map<std::pair<GenId, GenId>, Element> table_;
  std::shared_ptr<Cache> cache_;
};

/// Left action mirror (L |> f), used by the left crossed product and the
/// star product. Extension rules mirror RightAction:
///   L |> (f.g) = (L_(1) |> f) . (L_(2) |> g),  (L.M) |> f = L |> (M |> f).
class LeftAction {
 public:
  LeftAction(std::string name, BundlePtr acting, PresPtr module_alg,
             std::map<std::pair<GenId, GenId>, Element> table);

  const std::string& name() const { return name_; }
  const PresPtr& module_alg() const { return module_alg_; }
  const BundlePtr& acting() const { return acting_; }

  Element act(const Element& l, const Element& f) const;
  Element act_word(const Word& l, const Word& f) const;

  ActionReport verify(int degree = 2, std::uint64_t seed = 4) const;
  bool verified() const { return cache_->verified; }
  void require_verified() const;

 private:
  Element act_gen(GenId h_gen, const Element& f) const;
  Element act_word_gen(GenId h_gen, const Word& f) const;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Word, Word>, Element> memo;
    bool verified = false;
  };

  std::string name_;
  PresPtr module_alg_;
  BundlePtr acting_;
  std::map<std::pair<GenId, GenId>, Element> table_;  // (h_gen, a_gen)
  std::shared_ptr<Cache> cache_;
};

}  // namespace bicross

#endif
