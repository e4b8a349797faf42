#include "bicross/coaction.hpp"

#include "bicross/errors.hpp"
#include "bicross/random.hpp"

namespace bicross {

LeftCoaction::LeftCoaction(std::string name, BundlePtr coacting,
                           BundlePtr comodule)
    : name_(std::move(name)),
      coacting_(std::move(coacting)),
      comodule_(std::move(comodule)),
      extension_(Extension::kTrivial),
      ah_(tensor_product({coacting_->alg(), comodule_->alg()})),
      cache_(std::make_shared<Cache>()) {
  for (GenId g = 0; g < comodule_->alg()->size(); ++g)
    table_.emplace(
        g, embed_slot(ah_, 1, Element::generator(comodule_->alg(), g)));
}

LeftCoaction::LeftCoaction(std::string name, BundlePtr coacting,
                           BundlePtr comodule, std::map<GenId, Element> table,
                           std::shared_ptr<const RightAction> action)
    : name_(std::move(name)),
      coacting_(std::move(coacting)),
      comodule_(std::move(comodule)),
      table_(std::move(table)),
      extension_(Extension::kBicrossB),
      action_(std::move(action)),
      ah_(tensor_product({coacting_->alg(), comodule_->alg()})),
      cache_(std::make_shared<Cache>()) {
  if (!action_)
    throw ConfigError("coaction '" + name_ +
                      "': condition-(B) extension needs the right action");
  if (action_->module_alg() != coacting_->alg() ||
      action_->acting()->alg() != comodule_->alg())
    throw ConfigError("coaction '" + name_ +
                      "': associated action has mismatched algebras");
  for (GenId g = 0; g < comodule_->alg()->size(); ++g) {
    auto it = table_.find(g);
    if (it == table_.end())
      throw ConfigError("coaction '" + name_ + "' table misses generator " +
                        comodule_->alg()->gen(g).name);
    if (it->second.pres() != ah_)
      throw ConfigError("coaction '" + name_ +
                        "' table value outside A (x) H");
  }
}

Element LeftCoaction::coact_word(const Word& w) const {
  if (w.empty()) return Element::unit(ah_);
  if (w.size() == 1) return table_.at(w[0]);
  if (extension_ == Extension::kTrivial) {
    const PresPtr& h = comodule_->alg();
    return embed_slot(ah_, 1,
                      Element::from_word(h, w, Series::one(h->series_order())));
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->memo.find(w);
    if (it != cache_->memo.end()) return it->second;
  }
  // condition (B) with L = first letter, M = the rest:
  // beta(LM) = (L^(-1) <| M_(1)) (M_(2))^(-1) (x) L^(0) (M_(2))^(0)
  const PresPtr& ha = comodule_->alg();
  const PresPtr& aa = coacting_->alg();
  const int s = ha->size();
  Word rest(w, 1, Word::npos);
  Element d = comodule_->delta(
      Element::from_word(ha, rest, Series::one(ha->series_order())));
  const Element& bl = table_.at(w[0]);
  Element out = Element::zero(ah_);
  for (const auto& [wd, cd] : d.terms()) {
    auto m = split_blocks(wd, s, 2);
    Element bm2 = coact_word(m[1]);
    for (const auto& [wb, cb] : bl.terms()) {
      auto llegs = split_by_slots(*ah_, wb);
      Element acted = action_->act_word(llegs[0], m[0]);
      for (const auto& [w2, c2] : bm2.terms()) {
        auto mlegs = split_by_slots(*ah_, w2);
        Element apart =
            acted * Element::from_word(aa, mlegs[0],
                                       Series::one(aa->series_order()));
        Element hpart =
            Element::from_word(ha, llegs[1], Series::one(ha->series_order())) *
            Element::from_word(ha, mlegs[1], Series::one(ha->series_order()));
        out += (cd * cb * c2) *
               (embed_slot(ah_, 0, apart) * embed_slot(ah_, 1, hpart));
      }
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->memo.emplace(w, std::move(out)).first->second;
}

Element LeftCoaction::coact(const Element& l) const {
  if (l.pres() != comodule_->alg())
    throw InputError("coaction '" + name_ + "' applied outside the comodule");
  Element out = Element::zero(ah_);
  for (const auto& [w, c] : l.terms()) out += c * coact_word(w);
  return out;
}

void LeftCoaction::require_verified() const {
  if (!cache_->verified)
    throw ConfigError("coaction '" + name_ +
                      "' has not passed verify_comodule_coalgebra");
}

CoactionReport LeftCoaction::verify(int degree, std::uint64_t seed) const {
  CoactionReport rep;
  rep.title = "comodule coalgebra check for " + name_;
  const PresPtr& aa = coacting_->alg();
  const PresPtr& ha = comodule_->alg();
  const int na = aa->size();
  PresPtr t_aah = tensor_product({aa, aa, ha});
  PresPtr t_ahh = tensor_product({aa, ha, ha});

  Sampler sampler(seed);
  std::vector<std::pair<std::string, Element>> probes;
  for (GenId g = 0; g < ha->size(); ++g)
    probes.emplace_back(ha->gen(g).name, Element::generator(ha, g));
  for (int k = 0; k < 3; ++k)
    probes.emplace_back("sample" + std::to_string(k),
                        sampler.element(ha, degree, 2));

  auto one_a = [&] { return Series::one(aa->series_order()); };
  auto one_h = [&] { return Series::one(ha->series_order()); };

  // beta(1) = 1 (x) 1
  {
    Element res = coact(Element::unit(ha)) - Element::unit(ah_);
    if (res.is_zero())
      rep.pass("coaction." + name_ + ".unit");
    else
      rep.fail("coaction." + name_ + ".unit", "", canonical_witness(res).str());
  }

  for (const auto& [pname, e] : probes) {
    Element b = coact(e);

    // (16a): (id (x) beta) beta == (Delta_A (x) id) beta, in A (x) A (x) H
    {
      Element lhs = Element::zero(t_aah);
      Element rhs = Element::zero(t_aah);
      for (const auto& [w, c] : b.terms()) {
        auto legs = split_by_slots(*ah_, w);
        Element aw = Element::from_word(aa, legs[0], one_a());
        Element hb = coact_word(legs[1]);
        for (const auto& [w2, c2] : hb.terms()) {
          auto l2 = split_by_slots(*ah_, w2);
          lhs += (c * c2) *
                 (embed_slot(t_aah, 0, aw) *
                  embed_slot(t_aah, 1, Element::from_word(aa, l2[0], one_a())) *
                  embed_slot(t_aah, 2, Element::from_word(ha, l2[1], one_h())));
        }
        Element da = coacting_->delta(aw);
        rhs += c * (embed_at(t_aah, 0, da) *
                    embed_slot(t_aah, 2,
                               Element::from_word(ha, legs[1], one_h())));
      }
      Element res = lhs - rhs;
      std::string id = "coaction." + name_ + ".cond16a(" + pname + ")";
      if (res.is_zero())
        rep.pass(std::move(id), pname);
      else
        rep.fail(std::move(id), pname, canonical_witness(res).str());
    }

    // (16b): (eps_A (x) id) beta == id
    if (coacting_->counital()) {
      Element lhs = Element::zero(ha);
      for (const auto& [w, c] : b.terms()) {
        auto legs = split_by_slots(*ah_, w);
        Series ea = coacting_->counit().apply_word(legs[0]);
        lhs += (c * ea) * Element::from_word(ha, legs[1], one_h());
      }
      Element res = lhs - e;
      std::string id = "coaction." + name_ + ".cond16b(" + pname + ")";
      if (res.is_zero())
        rep.pass(std::move(id), pname);
      else
        rep.fail(std::move(id), pname, canonical_witness(res).str());
    } else if (&e == &probes.front().second) {
      rep.skip("coaction." + name_ + ".cond16b",
               "coacting bialgebra is non-counital");
    }

    // (17): L^(-1) eps_H(L^(0)) == eps_H(L) 1_A
    if (comodule_->counital()) {
      Element lhs = Element::zero(aa);
      for (const auto& [w, c] : b.terms()) {
        auto legs = split_by_slots(*ah_, w);
        Series eh = comodule_->counit().apply_word(legs[1]);
        lhs += (c * eh) * Element::from_word(aa, legs[0], one_a());
      }
      Element res = lhs - comodule_->counit().apply(e) * Element::unit(aa);
      std::string id = "coaction." + name_ + ".cond17(" + pname + ")";
      if (res.is_zero())
        rep.pass(std::move(id), pname);
      else
        rep.fail(std::move(id), pname, canonical_witness(res).str());
    } else if (&e == &probes.front().second) {
      rep.skip("coaction." + name_ + ".cond17",
               "comodule coalgebra is non-counital");
    }

    // (18): (id_A (x) Delta_H) beta == mult of legwise beta over Delta_H
    {
      Element lhs = Element::zero(t_ahh);
      for (const auto& [w, c] : b.terms()) {
        auto legs = split_by_slots(*ah_, w);
        Element dh = comodule_->delta(Element::from_word(ha, legs[1], one_h()));
        lhs += c * (embed_slot(t_ahh, 0,
                               Element::from_word(aa, legs[0], one_a())) *
                    embed_at(t_ahh, (GenId)na, dh));
      }
      Element rhs = Element::zero(t_ahh);
      Element dh = comodule_->delta(e);
      const int sh = ha->size();
      for (const auto& [wd, cd] : dh.terms()) {
        auto m = split_blocks(wd, sh, 2);
        Element b1 = coact_word(m[0]);
        Element b2 = coact_word(m[1]);
        for (const auto& [w1, c1] : b1.terms()) {
          auto l1 = split_by_slots(*ah_, w1);
          for (const auto& [w2, c2] : b2.terms()) {
            auto l2 = split_by_slots(*ah_, w2);
            Element apart = Element::from_word(aa, l1[0], one_a()) *
                            Element::from_word(aa, l2[0], one_a());
            rhs += (cd * c1 * c2) *
                   (embed_slot(t_ahh, 0, apart) *
                    embed_slot(t_ahh, 1,
                               Element::from_word(ha, l1[1], one_h())) *
                    embed_slot(t_ahh, 2,
                               Element::from_word(ha, l2[1], one_h())));
          }
        }
      }
      Element res = lhs - rhs;
      std::string id = "coaction." + name_ + ".cond18(" + pname + ")";
      if (res.is_zero())
        rep.pass(std::move(id), pname);
      else
        rep.fail(std::move(id), pname, canonical_witness(res).str());
    }
  }

  rep.sort();
  if (rep.all_passed()) cache_->verified = true;
  return rep;
}

}  // namespace bicross
