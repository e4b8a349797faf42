#include "bicross/bialgebra.hpp"

#include "bicross/errors.hpp"
#include "bicross/random.hpp"

namespace bicross {

BialgebraStructure::BialgebraStructure(std::string label, PresPtr alg,
                                       AlgebraMorphism coproduct,
                                       std::optional<Counit> counit,
                                       std::optional<AlgebraMorphism> antipode)
    : label_(std::move(label)),
      alg_(std::move(alg)),
      coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  if (coproduct_.domain() != alg_)
    throw ConfigError("coproduct domain is not the bundled algebra");
  if (coproduct_.codomain() != tensor_power(alg_, 2))
    throw ConfigError("coproduct codomain is not the tensor square");
  coproduct_.require_verified();
  if (counit_ && counit_->domain() != alg_)
    throw ConfigError("counit domain mismatch");
  if (antipode_) {
    if (antipode_->domain() != alg_ || antipode_->codomain() != alg_)
      throw ConfigError("antipode must map the algebra to itself");
    antipode_->require_verified();
  }
}

const Counit& BialgebraStructure::counit() const {
  if (!counit_)
    throw ConfigError("bundle '" + label_ + "' is non-counital");
  return *counit_;
}

const AlgebraMorphism& BialgebraStructure::antipode() const {
  if (!antipode_)
    throw ConfigError("bundle '" + label_ + "' has no antipode");
  return *antipode_;
}

BialgebraStructure BialgebraStructure::with_counit(Counit eps) const {
  BialgebraStructure b = *this;
  b.counit_ = std::move(eps);
  return b;
}

BialgebraStructure BialgebraStructure::with_antipode(AlgebraMorphism s) const {
  BialgebraStructure b = *this;
  b.antipode_ = std::move(s);
  return b;
}

void BialgebraStructure::record(const std::string& check, Status s) const {
  checklist_[check] = s;
}

// ---------------------------------------------------------------------------

Element convolve(const BialgebraStructure& b, const AlgebraMorphism* left,
                 const AlgebraMorphism* right, const Element& e) {
  const PresPtr& x = b.alg();
  const int s = x->size();
  Element out = Element::zero(x);
  Element d = b.delta(e);
  for (const auto& [w, c] : d.terms()) {
    auto legs = split_blocks(w, s, 2);
    Element l = left ? left->apply_word(legs[0])
                     : Element::from_word(x, legs[0], Series::one(b.order()));
    Element r = right ? right->apply_word(legs[1])
                      : Element::from_word(x, legs[1], Series::one(b.order()));
    out += c * (l * r);
  }
  return out;
}

Report check_coassociativity(const BialgebraStructure& b, int extra_degree,
                             std::uint64_t seed) {
  b.coproduct().require_verified();
  Report rep;
  rep.title = "coassociativity of " + b.label();
  const PresPtr& x = b.alg();
  AlgebraMorphism left = expand_leg(x, 2, 0, b.coproduct(), 2);
  AlgebraMorphism right = expand_leg(x, 2, 1, b.coproduct(), 2);

  auto residual = [&](const Element& e) {
    Element d = b.delta(e);
    return left.apply(d) - right.apply(d);
  };

  for (GenId g = 0; g < x->size(); ++g) {
    Element r = residual(Element::generator(x, g));
    std::string id = "coassoc.gen(" + x->gen(g).name + ")";
    if (r.is_zero())
      rep.pass(std::move(id), x->gen(g).name);
    else
      rep.fail(std::move(id), x->gen(g).name, canonical_witness(r).str());
  }
  if (extra_degree > 0) {
    Sampler sampler(seed);
    for (int k = 0; k < 8; ++k) {
      Element e = sampler.element(x, extra_degree, 3);
      Element r = residual(e);
      std::string id = "coassoc.sample(" + std::to_string(k) + ")";
      if (r.is_zero())
        rep.pass(std::move(id));
      else
        rep.fail(std::move(id), "", canonical_witness(r).str());
    }
  }
  rep.sort();
  b.record("coassociativity",
           rep.all_passed() ? Status::kPass : Status::kFail);
  return rep;
}

Report check_counit_axiom(const BialgebraStructure& b) {
  Report rep;
  rep.title = "counit axiom for " + b.label();
  if (!b.counital()) {
    rep.skip("counit.axiom", "non-counital bundle: checks mentioning eps "
             "are skipped");
    b.record("counit-axiom", Status::kSkip);
    return rep;
  }
  const PresPtr& x = b.alg();
  AlgebraMorphism eps_left = contract_leg(x, 2, 0, b.counit());
  AlgebraMorphism eps_right = contract_leg(x, 2, 1, b.counit());
  for (GenId g = 0; g < x->size(); ++g) {
    Element e = Element::generator(x, g);
    Element d = b.delta(e);
    Element rl = eps_left.apply(d) - e;
    Element rr = eps_right.apply(d) - e;
    std::string gname = x->gen(g).name;
    if (rl.is_zero())
      rep.pass("counit.left(" + gname + ")", gname);
    else
      rep.fail("counit.left(" + gname + ")", gname,
               canonical_witness(rl).str());
    if (rr.is_zero())
      rep.pass("counit.right(" + gname + ")", gname);
    else
      rep.fail("counit.right(" + gname + ")", gname,
               canonical_witness(rr).str());
  }
  rep.sort();
  b.record("counit-axiom", rep.all_passed() ? Status::kPass : Status::kFail);
  return rep;
}

Report check_antipode_axiom(const BialgebraStructure& b, int extra_degree,
                            std::uint64_t seed) {
  if (!b.counital())
    throw ConfigError("antipode axiom needs a counit (bundle '" + b.label() +
                      "')");
  Report rep;
  rep.title = "antipode axiom for " + b.label();
  if (!b.has_antipode())
    throw ConfigError("bundle '" + b.label() + "' has no antipode");
  const PresPtr& x = b.alg();
  const AlgebraMorphism& s = b.antipode();

  auto check_one = [&](const Element& e, const std::string& id,
                       const std::string& gens) {
    Element target = b.counit().apply(e) * Element::unit(x);
    Element lhs = convolve(b, &s, nullptr, e) - target;
    Element rhs = convolve(b, nullptr, &s, e) - target;
    if (lhs.is_zero())
      rep.pass(id + ".left", gens);
    else
      rep.fail(id + ".left", gens, canonical_witness(lhs).str());
    if (rhs.is_zero())
      rep.pass(id + ".right", gens);
    else
      rep.fail(id + ".right", gens, canonical_witness(rhs).str());
  };

  for (GenId g = 0; g < x->size(); ++g)
    check_one(Element::generator(x, g), "antipode.gen(" + x->gen(g).name + ")",
              x->gen(g).name);
  if (extra_degree > 0) {
    Sampler sampler(seed);
    for (int k = 0; k < 6; ++k)
      check_one(sampler.element(x, extra_degree, 2),
                "antipode.sample(" + std::to_string(k) + ")", "");
  }
  rep.sort();
  b.record("antipode-axiom", rep.all_passed() ? Status::kPass : Status::kFail);
  return rep;
}

CocommutativityResult check_cocommutativity(const BialgebraStructure& b) {
  CocommutativityResult out;
  out.detail.title = "cocommutativity of " + b.label();
  const PresPtr& x = b.alg();
  for (GenId g = 0; g < x->size(); ++g) {
    Element d = b.delta(Element::generator(x, g));
    Element r = flip_halves(d, x->size()) - d;
    std::string gname = x->gen(g).name;
    if (r.is_zero()) {
      out.detail.pass("cocomm(" + gname + ")", gname);
    } else {
      out.cocommutative = false;
      out.asymmetric_generators.push_back(gname);
      CheckLine line{"cocomm(" + gname + ")", Status::kPass, gname,
                     canonical_witness(r).str(),
                     "not cocommutative on this generator"};
      out.detail.lines.push_back(std::move(line));
    }
  }
  out.detail.sort();
  b.record("cocommutative",
           out.cocommutative ? Status::kPass : Status::kFail);
  return out;
}

Report run_axiom_suite(const BialgebraStructure& b, int extra_degree) {
  Report rep;
  rep.title = "axiom suite for " + b.label();
  rep.merge(b.coproduct().verify());
  rep.merge(check_coassociativity(b, extra_degree));
  rep.merge(check_counit_axiom(b));
  if (b.counital() && b.has_antipode())
    rep.merge(check_antipode_axiom(b, extra_degree));
  else if (!b.has_antipode())
    rep.skip("antipode.axiom", "no antipode on this bundle");
  rep.sort();
  return rep;
}

}  // namespace bicross
