#include "bicross/solve.hpp"

#include <set>
#include <sstream>

#include "bicross/errors.hpp"
#include "bicross/linsolve.hpp"

namespace bicross {

namespace {

Series eps_word(const std::vector<Series>& values, const Word& w, int order) {
  Series s = Series::one(order);
  for (unsigned char g : w) {
    s = s * values[g];
    if (s.is_zero()) break;
  }
  return s;
}

// eps applied to the remainder of a rule
Series rel_residual(const Presentation& p, const Terms& rem,
                    const std::vector<Series>& values) {
  Series acc(p.series_order());
  for (const auto& [w, c] : rem) acc += c * eps_word(values, w, p.series_order());
  return acc;
}

// (eps (x) id) Delta(g) - g   resp.   (id (x) eps) Delta(g) - g
Element axiom_residual(const PresPtr& alg, const AlgebraMorphism& delta,
                       const std::vector<Series>& values, GenId g, bool left) {
  const int s = alg->size();
  Element gen = Element::generator(alg, g);
  Element d = delta.apply(gen);
  Element out = Element::zero(alg);
  for (const auto& [w, c] : d.terms()) {
    auto legs = split_blocks(w, s, 2);
    const Word& scalar_leg = left ? legs[0] : legs[1];
    const Word& keep_leg = left ? legs[1] : legs[0];
    Series e = eps_word(values, scalar_leg, alg->series_order());
    if (e.is_zero()) continue;
    out += (c * e) * Element::from_word(alg, keep_leg,
                                        Series::one(alg->series_order()));
  }
  return out - gen;
}

std::string commutator_display(const Presentation& p, GenId hi, GenId lo,
                               const Terms* rem) {
  // rule hi*lo -> lo*hi + rem reads as [lo, hi] = -rem
  Terms neg;
  if (rem)
    for (const auto& [w, c] : *rem) neg.emplace(w, -c);
  Element rhs = Element::from_terms(p.shared_from_this(), std::move(neg));
  return "[" + p.gen(lo).name + "," + p.gen(hi).name + "] = " + rhs.str();
}

std::string scalar_contradiction(const Series& minus_r) {
  Series s = minus_r;
  if (s.leading_negative()) s = -s;
  return "0 = " + s.compact_str();
}

struct RowSource {
  enum Kind { kRelation, kAxiom } kind;
  GenId hi = 0, lo = 0;     // relation witness
  GenId gen = 0;            // axiom witness
  bool left = true;         // axiom side
  Word word;                // axiom residual component
};

}  // namespace

Series replay(const ObstructionCertificate& cert) {
  if (!cert.rule)
    throw ConfigError("certificate is axiom-witnessed; no scalar replay");
  const Presentation& p = *cert.alg;
  auto [hi, lo] = *cert.rule;
  const Terms* rem = p.remainder(hi, lo);
  // eps([lo,hi]) - eps(-rem) = 0 - eps(-rem) = eps(rem)
  Series r(p.series_order());
  if (rem) r = rel_residual(p, *rem, cert.attempted);
  return r;
}

SolveCounitResult solve_counit(const PresPtr& alg,
                               const AlgebraMorphism* coproduct) {
  const Presentation& p = *alg;
  const int n = p.size();
  const int order = p.series_order();
  if (coproduct) coproduct->require_verified();

  struct Rule {
    GenId hi, lo;
    const Terms* rem;
  };
  std::vector<Rule> rules;
  for (GenId hi = 1; hi < n; ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      if (p.factor_of(hi) != p.factor_of(lo)) continue;
      const Terms* rem = p.remainder(hi, lo);
      if (rem) rules.push_back({hi, lo, rem});
    }

  std::vector<Series> values(n, Series(order));

  auto make_certificate = [&](const RowSource& src,
                              const std::vector<Series>& attempted) {
    ObstructionCertificate cert;
    cert.alg = alg;
    cert.attempted = attempted;
    if (src.kind == RowSource::kRelation) {
      const Terms* rem = p.remainder(src.hi, src.lo);
      cert.rule = std::make_pair(src.hi, src.lo);
      cert.relation = commutator_display(p, src.hi, src.lo, rem);
      Series r(order);
      if (rem) r = rel_residual(p, *rem, attempted);
      cert.derived_equation = scalar_contradiction(-r);
    } else {
      cert.axiom_witness = std::string("counit-axiom.") +
                           (src.left ? "left" : "right") + "(" +
                           p.gen(src.gen).name + ")";
      cert.relation = cert.axiom_witness;
      Element res =
          axiom_residual(alg, *coproduct, attempted, src.gen, src.left);
      cert.derived_equation = "0 = " + canonical_witness(res).str();
    }
    return cert;
  };

  for (int k = 0; k <= order; ++k) {
    // one row per scalar equation component; columns are eps_k(gen)
    std::vector<std::vector<Scalar>> a;
    std::vector<Scalar> b;
    std::vector<RowSource> sources;

    std::vector<std::pair<GenId, bool>> axiom_eqs;
    if (coproduct)
      for (GenId g = 0; g < n; ++g) {
        axiom_eqs.emplace_back(g, true);
        axiom_eqs.emplace_back(g, false);
      }

    auto evaluate = [&](const std::vector<Series>& vals) {
      std::vector<Series> rel_out;
      std::vector<Element> ax_out;
      for (const auto& r : rules) rel_out.push_back(rel_residual(p, *r.rem, vals));
      for (auto [g, left] : axiom_eqs)
        ax_out.push_back(axiom_residual(alg, *coproduct, vals, g, left));
      return std::make_pair(std::move(rel_out), std::move(ax_out));
    };

    auto base = evaluate(values);
    std::vector<decltype(base)> pert;
    pert.reserve(n);
    for (GenId u = 0; u < n; ++u) {
      std::vector<Series> vals = values;
      vals[u].set(k, vals[u].coeff(k) + Scalar(1));
      pert.push_back(evaluate(vals));
    }

    // relation rows
    for (std::size_t r = 0; r < rules.size(); ++r) {
      std::vector<Scalar> row(n);
      bool nontrivial = false;
      Scalar rhs = -base.first[r].coeff(k);
      if (!rhs.is_zero()) nontrivial = true;
      for (GenId u = 0; u < n; ++u) {
        row[u] = pert[u].first[r].coeff(k) - base.first[r].coeff(k);
        if (!row[u].is_zero()) nontrivial = true;
      }
      if (!nontrivial) continue;
      a.push_back(std::move(row));
      b.push_back(rhs);
      sources.push_back({RowSource::kRelation, rules[r].hi, rules[r].lo});
    }
    // axiom rows, one per word component
    for (std::size_t e = 0; e < axiom_eqs.size(); ++e) {
      std::set<Word> support;
      for (const auto& [w, c] : base.second[e].terms()) support.insert(w);
      for (GenId u = 0; u < n; ++u)
        for (const auto& [w, c] : pert[u].second[e].terms()) support.insert(w);
      for (const Word& w : support) {
        auto coeff_at = [&](const Element& el) {
          auto it = el.terms().find(w);
          return it == el.terms().end() ? Scalar() : it->second.coeff(k);
        };
        std::vector<Scalar> row(n);
        bool nontrivial = false;
        Scalar base_c = coeff_at(base.second[e]);
        if (!base_c.is_zero()) nontrivial = true;
        for (GenId u = 0; u < n; ++u) {
          row[u] = coeff_at(pert[u].second[e]) - base_c;
          if (!row[u].is_zero()) nontrivial = true;
        }
        if (!nontrivial) continue;
        a.push_back(std::move(row));
        b.push_back(-base_c);
        RowSource src{RowSource::kAxiom};
        src.gen = axiom_eqs[e].first;
        src.left = axiom_eqs[e].second;
        src.word = w;
        sources.push_back(std::move(src));
      }
    }

    if (!a.empty()) {
      LinearSolution sol = solve_linear(std::move(a), std::move(b));
      if (sol.kind == LinearSolution::kInconsistent)
        return make_certificate(sources[sol.witness_row], values);
      if (sol.kind == LinearSolution::kUnderdetermined) {
        CounitFreeParameters fp;
        for (int c : sol.free_columns)
          fp.parameters.push_back("eps(" + p.gen((GenId)c).name + ") at h^" +
                                  std::to_string(k));
        fp.particular = values;
        return fp;
      }
      for (GenId u = 0; u < n; ++u) values[u].set(k, sol.values[u]);
    }

    // exact re-check of this order (catches dropped nonlinear terms)
    auto checked = evaluate(values);
    for (std::size_t r = 0; r < checked.first.size(); ++r)
      if (!checked.first[r].coeff(k).is_zero())
        return make_certificate(
            {RowSource::kRelation, rules[r].hi, rules[r].lo}, values);
    for (std::size_t e = 0; e < checked.second.size(); ++e)
      for (const auto& [w, c] : checked.second[e].terms())
        if (!c.coeff(k).is_zero()) {
          RowSource src{RowSource::kAxiom};
          src.gen = axiom_eqs[e].first;
          src.left = axiom_eqs[e].second;
          return make_certificate(src, values);
        }
  }

  return Counit(alg, std::move(values));
}

// ---------------------------------------------------------------------------

SolveAntipodeResult solve_antipode(const BialgebraStructure& b) {
  if (!b.counital())
    throw ConfigError("solve_antipode needs a counital bundle");
  const PresPtr& x = b.alg();
  const int n = x->size();
  const int order = b.order();

  // h^0 part must be primitive: the recursion starts from S_0 = -id
  for (GenId g = 0; g < n; ++g) {
    Element gen = Element::generator(x, g);
    Element expected = embed_at(b.square(), 0, gen) +
                       embed_at(b.square(), (GenId)n, gen);
    Element res = b.delta(gen).h_component(0) - expected.h_component(0);
    if (!res.is_zero()) {
      AntipodeFailure f;
      f.reason = "order-0 coproduct is not primitive on " + x->gen(g).name;
      f.detail.fail("antipode.h0(" + x->gen(g).name + ")", x->gen(g).name,
                    canonical_witness(res).str());
      return f;
    }
  }

  std::vector<Element> images;
  for (GenId g = 0; g < n; ++g)
    images.push_back(-Element::generator(x, g));

  for (int k = 1; k <= order; ++k) {
    for (GenId g = 0; g < n; ++g) {
      AlgebraMorphism partial("S_partial", x, x, images,
                              Parity::kAntimultiplicative);
      Element gen = Element::generator(x, g);
      Element target = b.counit().apply(gen) * Element::unit(x);
      Element residual = convolve(b, &partial, nullptr, gen) - target;
      Element fix = residual.h_component(k);
      if (!fix.is_zero()) images[g] -= fix.shifted_by_h(k);
    }
  }

  AlgebraMorphism s("S_" + b.label(), x, x, std::move(images),
                    Parity::kAntimultiplicative);
  Report morph = s.verify();
  if (!morph.all_passed()) {
    AntipodeFailure f;
    f.reason = "solved antipode fails the antimorphism property";
    f.detail = std::move(morph);
    return f;
  }
  BialgebraStructure probe = b.with_antipode(s);
  Report axiom = check_antipode_axiom(probe, 2);
  if (!axiom.all_passed()) {
    AntipodeFailure f;
    f.reason = "solved antipode fails the antipode axiom";
    f.detail = std::move(axiom);
    return f;
  }
  return s;
}

}  // namespace bicross
