#include "bicross/action.hpp"

#include "bicross/errors.hpp"
#include "bicross/random.hpp"

namespace bicross {

RightAction::RightAction(std::string name, PresPtr module_alg, BundlePtr acting,
                         std::map<std::pair<GenId, GenId>, Element> table)
    : name_(std::move(name)),
      module_alg_(std::move(module_alg)),
      acting_(std::move(acting)),
      table_(std::move(table)),
      cache_(std::make_shared<Cache>()) {
  if (!acting_->counital())
    throw ConfigError(
        "action '" + name_ +
        "': the acting bialgebra must be counital (1 <| L = eps(L) 1)");
  for (GenId a = 0; a < module_alg_->size(); ++a)
    for (GenId h = 0; h < acting_->alg()->size(); ++h) {
      auto it = table_.find({a, h});
      if (it == table_.end())
        throw ConfigError("action '" + name_ + "' table misses " +
                          module_alg_->gen(a).name + " <| " +
                          acting_->alg()->gen(h).name);
      if (it->second.pres() != module_alg_)
        throw ConfigError("action '" + name_ +
                          "' table value outside the module algebra");
    }
}

const Element& RightAction::table_entry(GenId a_gen, GenId h_gen) const {
  return table_.at({a_gen, h_gen});
}

Element RightAction::act_word_gen(const Word& f, GenId h_gen) const {
  if (f.empty())
    return acting_->counit().value(h_gen) * Element::unit(module_alg_);
  if (f.size() == 1) return table_.at({f[0], h_gen});
  Word head(1, f[0]);
  Word rest(f, 1, Word::npos);
  // (f.g) <| L = (f <| L_(1)) (g <| L_(2))
  const PresPtr& hh = acting_->square();
  Element d = acting_->delta(Element::generator(acting_->alg(), h_gen));
  Element out = Element::zero(module_alg_);
  const int s = acting_->alg()->size();
  (void)hh;
  for (const auto& [w, c] : d.terms()) {
    auto legs = split_blocks(w, s, 2);
    out += c * (act_word(head, legs[0]) * act_word(rest, legs[1]));
  }
  return out;
}

Element RightAction::act_gen(const Element& f, GenId h_gen) const {
  Element out = Element::zero(module_alg_);
  for (const auto& [w, c] : f.terms()) out += c * act_word_gen(w, h_gen);
  return out;
}

Element RightAction::act_word(const Word& f, const Word& l) const {
  if (l.empty()) {
    return Element::from_word(module_alg_, f,
                              Series::one(module_alg_->series_order()));
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->memo.find({f, l});
    if (it != cache_->memo.end()) return it->second;
  }
  // f <| (L.M) = (f <| L) <| M : peel the leftmost H letter
  Element cur = act_word_gen(f, l[0]);
  for (std::size_t i = 1; i < l.size(); ++i) cur = act_gen(cur, l[i]);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->memo.emplace(std::make_pair(f, l), std::move(cur))
      .first->second;
}

Element RightAction::act(const Element& f, const Element& l) const {
  if (f.pres() != module_alg_)
    throw InputError("action '" + name_ + "': f outside the module algebra");
  if (l.pres() != acting_->alg())
    throw InputError("action '" + name_ + "': L outside the acting bialgebra");
  Element out = Element::zero(module_alg_);
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wl, cl] : l.terms())
      out += (cf * cl) * act_word(wf, wl);
  return out;
}

void RightAction::require_verified() const {
  if (!cache_->verified)
    throw ConfigError("action '" + name_ +
                      "' has not passed verify_module_algebra");
}

ActionReport RightAction::verify(int degree, std::uint64_t seed) const {
  ActionReport rep;
  rep.title = "module algebra check for " + name_;
  const PresPtr& ha = acting_->alg();
  const PresPtr& aa = module_alg_;
  Sampler sampler(seed);

  std::vector<Element> probes;
  for (GenId a = 0; a < aa->size(); ++a)
    probes.push_back(Element::generator(aa, a));
  for (int k = 0; k < 4; ++k) probes.push_back(sampler.element(aa, degree, 2));

  // (i) H relations: f <| (hi.lo) == f <| (lo.hi + rem)
  for (GenId hi = 1; hi < ha->size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      const Terms* rem =
          ha->factor_of(hi) != ha->factor_of(lo) ? nullptr : ha->remainder(hi, lo);
      Word whl;
      whl.push_back(hi);
      whl.push_back(lo);
      Word wlh;
      wlh.push_back(lo);
      wlh.push_back(hi);
      std::string id = "action." + name_ + ".hrel(" + ha->gen(hi).name + "*" +
                       ha->gen(lo).name + ")";
      std::string gens = ha->gen(hi).name + "," + ha->gen(lo).name;
      Element bad = Element::zero(aa);
      bool ok = true;
      for (const auto& f : probes) {
        Element lhs = Element::zero(aa);
        for (const auto& [w, c] : f.terms()) lhs += c * act_word(w, whl);
        Element rhs = Element::zero(aa);
        for (const auto& [w, c] : f.terms()) {
          rhs += c * act_word(w, wlh);
          if (rem)
            for (const auto& [rw, rc] : *rem) {
              Element acted = act_word(w, rw);
              rhs += (c * rc) * acted;
            }
        }
        Element res = lhs - rhs;
        if (!res.is_zero()) {
          ok = false;
          bad = res;
          break;
        }
      }
      if (ok)
        rep.pass(std::move(id), std::move(gens));
      else
        rep.fail(std::move(id), std::move(gens), canonical_witness(bad).str());
    }

  // (ii) A relations: Sweedler on the unnormalized product vs the normal
  // form, for every A rule and acting generator
  const int s = ha->size();
  for (GenId hi = 1; hi < aa->size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      const Terms* rem =
          aa->factor_of(hi) != aa->factor_of(lo) ? nullptr : aa->remainder(hi, lo);
      std::string id = "action." + name_ + ".arel(" + aa->gen(hi).name + "*" +
                       aa->gen(lo).name + ")";
      std::string gens = aa->gen(hi).name + "," + aa->gen(lo).name;
      Element bad = Element::zero(aa);
      bool ok = true;
      for (GenId g = 0; g < ha->size() && ok; ++g) {
        Element d = acting_->delta(Element::generator(ha, g));
        Element lhs = Element::zero(aa);
        Word whi(1, hi), wlo(1, lo);
        for (const auto& [w, c] : d.terms()) {
          auto legs = split_blocks(w, s, 2);
          lhs += c * (act_word(whi, legs[0]) * act_word(wlo, legs[1]));
        }
        Terms value;
        if (rem) value = *rem;
        Word swapped;
        swapped.push_back(lo);
        swapped.push_back(hi);
        auto [it, fresh] =
            value.emplace(std::move(swapped), Series::one(aa->series_order()));
        if (!fresh) it->second += Series::one(aa->series_order());
        Element rhs =
            act(Element::from_terms(aa, std::move(value)),
                Element::generator(ha, g));
        Element res = lhs - rhs;
        if (!res.is_zero()) {
          ok = false;
          bad = res;
        }
      }
      if (ok)
        rep.pass(std::move(id), std::move(gens));
      else
        rep.fail(std::move(id), std::move(gens), canonical_witness(bad).str());
    }

  // (iii) unit laws
  {
    bool ok = true;
    Element bad = Element::zero(aa);
    for (GenId g = 0; g < ha->size() && ok; ++g) {
      Element res = act(Element::unit(aa), Element::generator(ha, g)) -
                    acting_->counit().value(g) * Element::unit(aa);
      if (!res.is_zero()) {
        ok = false;
        bad = res;
      }
    }
    for (const auto& f : probes) {
      if (!ok) break;
      Element res = act(f, Element::unit(ha)) - f;
      if (!res.is_zero()) {
        ok = false;
        bad = res;
      }
    }
    if (ok)
      rep.pass("action." + name_ + ".units");
    else
      rep.fail("action." + name_ + ".units", "", canonical_witness(bad).str());
  }

  rep.sort();
  if (rep.all_passed()) cache_->verified = true;
  return rep;
}

// ---------------------------------------------------------------------------

LeftAction::LeftAction(std::string name, BundlePtr acting, PresPtr module_alg,
                       std::map<std::pair<GenId, GenId>, Element> table)
    : name_(std::move(name)),
      module_alg_(std::move(module_alg)),
      acting_(std::move(acting)),
      table_(std::move(table)),
      cache_(std::make_shared<Cache>()) {
  if (!acting_->counital())
    throw ConfigError("action '" + name_ +
                      "': the acting bialgebra must be counital");
  for (GenId h = 0; h < acting_->alg()->size(); ++h)
    for (GenId a = 0; a < module_alg_->size(); ++a)
      if (!table_.count({h, a}))
        throw ConfigError("action '" + name_ + "' table misses " +
                          acting_->alg()->gen(h).name + " |> " +
                          module_alg_->gen(a).name);
}

Element LeftAction::act_word_gen(GenId h_gen, const Word& f) const {
  if (f.empty())
    return acting_->counit().value(h_gen) * Element::unit(module_alg_);
  if (f.size() == 1) return table_.at({h_gen, f[0]});
  Word head(1, f[0]);
  Word rest(f, 1, Word::npos);
  Element d = acting_->delta(Element::generator(acting_->alg(), h_gen));
  Element out = Element::zero(module_alg_);
  const int s = acting_->alg()->size();
  for (const auto& [w, c] : d.terms()) {
    auto legs = split_blocks(w, s, 2);
    out += c * (act_word(legs[0], head) * act_word(legs[1], rest));
  }
  return out;
}

Element LeftAction::act_gen(GenId h_gen, const Element& f) const {
  Element out = Element::zero(module_alg_);
  for (const auto& [w, c] : f.terms()) out += c * act_word_gen(h_gen, w);
  return out;
}

Element LeftAction::act_word(const Word& l, const Word& f) const {
  if (l.empty())
    return Element::from_word(module_alg_, f,
                              Series::one(module_alg_->series_order()));
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->memo.find({l, f});
    if (it != cache_->memo.end()) return it->second;
  }
  // (L.M) |> f = L |> (M |> f): peel the rightmost H letter first
  Element cur = act_word_gen(l.back(), f);
  for (std::size_t i = l.size() - 1; i-- > 0;) cur = act_gen(l[i], cur);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->memo.emplace(std::make_pair(l, f), std::move(cur))
      .first->second;
}

Element LeftAction::act(const Element& l, const Element& f) const {
  if (f.pres() != module_alg_ || l.pres() != acting_->alg())
    throw InputError("action '" + name_ + "': operand outside its algebra");
  Element out = Element::zero(module_alg_);
  for (const auto& [wl, cl] : l.terms())
    for (const auto& [wf, cf] : f.terms())
      out += (cl * cf) * act_word(wl, wf);
  return out;
}

void LeftAction::require_verified() const {
  if (!cache_->verified)
    throw ConfigError("action '" + name_ +
                      "' has not passed verify_module_algebra");
}

ActionReport LeftAction::verify(int degree, std::uint64_t seed) const {
  ActionReport rep;
  rep.title = "module algebra check for " + name_;
  const PresPtr& ha = acting_->alg();
  const PresPtr& aa = module_alg_;
  Sampler sampler(seed);

  std::vector<Element> probes;
  for (GenId a = 0; a < aa->size(); ++a)
    probes.push_back(Element::generator(aa, a));
  for (int k = 0; k < 4; ++k) probes.push_back(sampler.element(aa, degree, 2));

  for (GenId hi = 1; hi < ha->size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      const Terms* rem =
          ha->factor_of(hi) != ha->factor_of(lo) ? nullptr : ha->remainder(hi, lo);
      Word whl;
      whl.push_back(hi);
      whl.push_back(lo);
      Word wlh;
      wlh.push_back(lo);
      wlh.push_back(hi);
      std::string id = "action." + name_ + ".hrel(" + ha->gen(hi).name + "*" +
                       ha->gen(lo).name + ")";
      Element bad = Element::zero(aa);
      bool ok = true;
      for (const auto& f : probes) {
        Element lhs = Element::zero(aa);
        Element rhs = Element::zero(aa);
        for (const auto& [w, c] : f.terms()) {
          lhs += c * act_word(whl, w);
          rhs += c * act_word(wlh, w);
          if (rem)
            for (const auto& [rw, rc] : *rem) rhs += (c * rc) * act_word(rw, w);
        }
        Element res = lhs - rhs;
        if (!res.is_zero()) {
          ok = false;
          bad = res;
          break;
        }
      }
      if (ok)
        rep.pass(std::move(id));
      else
        rep.fail(std::move(id), "", canonical_witness(bad).str());
    }

  const int s = ha->size();
  for (GenId hi = 1; hi < aa->size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      const Terms* rem =
          aa->factor_of(hi) != aa->factor_of(lo) ? nullptr : aa->remainder(hi, lo);
      std::string id = "action." + name_ + ".arel(" + aa->gen(hi).name + "*" +
                       aa->gen(lo).name + ")";
      Element bad = Element::zero(aa);
      bool ok = true;
      for (GenId g = 0; g < ha->size() && ok; ++g) {
        Element d = acting_->delta(Element::generator(ha, g));
        Element lhs = Element::zero(aa);
        Word whi(1, hi), wlo(1, lo);
        for (const auto& [w, c] : d.terms()) {
          auto legs = split_blocks(w, s, 2);
          lhs += c * (act_word(legs[0], whi) * act_word(legs[1], wlo));
        }
        Terms value;
        if (rem) value = *rem;
        Word swapped;
        swapped.push_back(lo);
        swapped.push_back(hi);
        auto [it, fresh] =
            value.emplace(std::move(swapped), Series::one(aa->series_order()));
        if (!fresh) it->second += Series::one(aa->series_order());
        Element rhs = act(Element::generator(ha, g),
                          Element::from_terms(aa, std::move(value)));
        Element res = lhs - rhs;
        if (!res.is_zero()) {
          ok = false;
          bad = res;
        }
      }
      if (ok)
        rep.pass(std::move(id));
      else
        rep.fail(std::move(id), "", canonical_witness(bad).str());
    }

  rep.sort();
  if (rep.all_passed()) cache_->verified = true;
  return rep;
}

}  // namespace bicross
