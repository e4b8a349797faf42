#include "bicross/morphism.hpp"

#include "bicross/errors.hpp"

namespace bicross {

AlgebraMorphism::AlgebraMorphism(std::string name, PresPtr domain,
                                 PresPtr codomain,
                                 std::vector<Element> images, Parity parity)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      parity_(parity),
      state_(std::make_shared<State>()) {
  if ((int)images_.size() != domain_->size())
    throw ConfigError("morphism '" + name_ + "' must map every generator (" +
                      std::to_string(images_.size()) + " images for " +
                      std::to_string(domain_->size()) + " generators)");
  for (const auto& img : images_)
    if (!img.valid() || img.pres() != codomain_)
      throw ConfigError("morphism '" + name_ +
                        "' has an image outside its codomain");
}

Element AlgebraMorphism::apply_word(const Word& w) const {
  if (w.empty()) return Element::unit(codomain_);
  if (w.size() == 1) return images_[w[0]];
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(w);
    if (it != state_->cache.end()) return it->second;
  }
  // peel one letter so sub-words (prefixes or suffixes, depending on
  // parity) land in the cache as well
  Element rest, out;
  if (parity_ == Parity::kMultiplicative) {
    Word head(w, 0, w.size() - 1);
    rest = apply_word(head);
    out = rest * images_[w.back()];
  } else {
    Word tail(w, 1, Word::npos);
    rest = apply_word(tail);
    out = rest * images_[w.front()];
  }
  std::lock_guard<std::mutex> lock(state_->mutex);
  return state_->cache.emplace(w, std::move(out)).first->second;
}

Element AlgebraMorphism::apply(const Element& e) const {
  if (e.pres() != domain_)
    throw InputError("morphism '" + name_ + "' applied outside its domain");
  Element out = Element::zero(codomain_);
  for (const auto& [w, c] : e.terms()) out += c * apply_word(w);
  return out;
}

MorphismReport AlgebraMorphism::verify() const {
  MorphismReport rep;
  rep.title = "morphism " + name_;
  const Presentation& p = *domain_;
  for (GenId hi = 1; hi < p.size(); ++hi) {
    for (GenId lo = 0; lo < hi; ++lo) {
      // cross-slot pairs commute with no remainder but still constrain the
      // images, so they are checked too
      const Terms* rem = p.factor_of(hi) != p.factor_of(lo)
                             ? nullptr
                             : p.remainder(hi, lo);
      // rule value lo*hi + remainder
      Terms value;
      if (rem) value = *rem;
      Word swapped;
      swapped.push_back(lo);
      swapped.push_back(hi);
      auto [it, fresh] =
          value.emplace(std::move(swapped), Series::one(p.series_order()));
      if (!fresh) it->second += Series::one(p.series_order());
      Element rhs = apply(Element::from_terms(domain_, std::move(value)));
      Element lhs = parity_ == Parity::kMultiplicative
                        ? images_[hi] * images_[lo]
                        : images_[lo] * images_[hi];
      Element residual = lhs - rhs;
      std::string id =
          "hom." + name_ + ".rel(" + p.gen(hi).name + "*" + p.gen(lo).name + ")";
      std::string gens = p.gen(hi).name + "," + p.gen(lo).name;
      if (residual.is_zero())
        rep.pass(std::move(id), std::move(gens));
      else
        rep.fail(std::move(id), std::move(gens),
                 canonical_witness(residual).str());
    }
  }
  rep.sort();
  if (rep.all_passed()) state_->verified = true;
  return rep;
}

void AlgebraMorphism::require_verified() const {
  if (!state_->verified)
    throw ConfigError("morphism '" + name_ +
                      "' has not passed verify_morphism");
}

// ---------------------------------------------------------------------------

Counit::Counit(PresPtr domain, std::vector<Series> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if ((int)values_.size() != domain_->size())
    throw ConfigError("counit must assign a value to every generator");
}

Series Counit::apply_word(const Word& w) const {
  Series s = Series::one(domain_->series_order());
  for (unsigned char g : w) {
    s = s * values_.at(g);
    if (s.is_zero()) break;
  }
  return s;
}

Series Counit::apply(const Element& e) const {
  if (e.pres() != domain_) throw InputError("counit applied outside domain");
  Series acc(domain_->series_order());
  for (const auto& [w, c] : e.terms()) acc += c * apply_word(w);
  return acc;
}

Report Counit::verify() const {
  Report rep;
  rep.title = "counit on " + domain_->label();
  const Presentation& p = *domain_;
  for (GenId hi = 1; hi < p.size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      if (p.factor_of(hi) != p.factor_of(lo)) continue;
      const Terms* rem = p.remainder(hi, lo);
      // eps(hi)eps(lo) - eps(lo)eps(hi) - eps(rem) = -eps(rem)
      Series residual(p.series_order());
      if (rem)
        for (const auto& [w, c] : *rem) residual += c * apply_word(w);
      std::string id = "counit.rel(" + p.gen(hi).name + "*" + p.gen(lo).name +
                       ")";
      std::string gens = p.gen(hi).name + "," + p.gen(lo).name;
      if (residual.is_zero())
        rep.pass(std::move(id), std::move(gens));
      else
        rep.fail(std::move(id), std::move(gens), residual.compact_str());
    }
  rep.sort();
  return rep;
}

// ---------------------------------------------------------------------------

AlgebraMorphism expand_leg(const PresPtr& x, int m, int leg,
                           const AlgebraMorphism& f, int k) {
  PresPtr dom = tensor_power(x, m);
  PresPtr cod = tensor_power(x, m + k - 1);
  const int s = x->size();
  std::vector<Element> images;
  images.reserve(dom->size());
  for (int block = 0; block < m; ++block) {
    for (GenId g = 0; g < s; ++g) {
      if (block == leg) {
        images.push_back(embed_at(cod, (GenId)(block * s), f.image(g)));
      } else {
        int target = block < leg ? block : block + k - 1;
        images.push_back(embed_at(
            cod, (GenId)(target * s), Element::generator(x, g)));
      }
    }
  }
  std::string name = f.name() + "@leg" + std::to_string(leg) + "/" +
                     std::to_string(m);
  return AlgebraMorphism(std::move(name), dom, cod, std::move(images));
}

AlgebraMorphism contract_leg(const PresPtr& x, int m, int leg,
                             const Counit& eps) {
  if (m < 2) throw ConfigError("contract_leg needs at least two legs");
  PresPtr dom = tensor_power(x, m);
  PresPtr cod = m == 2 ? x : tensor_power(x, m - 1);
  const int s = x->size();
  std::vector<Element> images;
  images.reserve(dom->size());
  for (int block = 0; block < m; ++block) {
    for (GenId g = 0; g < s; ++g) {
      if (block == leg) {
        images.push_back(eps.value(g) * Element::unit(cod));
      } else {
        int target = block < leg ? block : block - 1;
        images.push_back(
            embed_at(cod, (GenId)(target * s), Element::generator(x, g)));
      }
    }
  }
  std::string name = "eps@leg" + std::to_string(leg) + "/" + std::to_string(m);
  return AlgebraMorphism(std::move(name), dom, cod, std::move(images));
}

}  // namespace bicross
