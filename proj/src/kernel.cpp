#include "diffcat/kernel.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/models/module_maps.hpp"
#include "diffcat/models/streams.hpp"
#include "diffcat/rng.hpp"

#include <unordered_map>

namespace diffcat {

Morphism epsilon(const Model& model, const Morphism& f) { return model.epsilon(f); }

Morphism derivative(const Model& model, const Morphism& f) { return model.derivative(f); }

Morphism oplus(const Model& model, const Morphism& f, const Morphism& g) {
  return add(f, model.epsilon(g)).renamed("oplus(" + f.name() + ", " + g.name() + ")");
}

namespace {

const Morphism& parallel_partner(const std::vector<Morphism>& subjects) {
  const Morphism& f = subjects.front();
  for (std::size_t i = 1; i < subjects.size(); ++i)
    if (subjects[i].dom() == f.dom() && subjects[i].cod() == f.cod())
      return subjects[i];
  return f;
}

Morphism composable_partner(const std::vector<Morphism>& subjects) {
  const Morphism& f = subjects.front();
  for (std::size_t i = 1; i < subjects.size(); ++i)
    if (subjects[i].dom() == f.cod())
      return subjects[i];
  if (f.dom() == f.cod())
    return f;
  return identity(f.cod());
}

LawReport structural_pass(const Model& model, AxiomId id, const std::string& subject,
                          const EqualityStrategy& strat) {
  LawReport r;
  r.axiom = axiom_name(id);
  r.model = model.name();
  r.subject = subject;
  r.strategy = "structural";
  r.seed = strat.seed;
  r.clause = "the induced change action has delta = base";
  return r;
}

} // namespace

LawReport check_axiom(const Model& model, AxiomId axiom, const std::vector<Morphism>& subjects,
                      const EqualityStrategy& strat) {
  if (subjects.empty())
    throw ShapeMismatch("check_axiom needs at least one subject");
  const Morphism& f = subjects.front();
  if (axiom == AxiomId::F1)
    return structural_pass(model, axiom, f.dom().to_string(), strat);
  if (axiom == AxiomId::F4)
    return check_right_injectivity(model, f.dom(), strat);
  const BaseCategory cat(model);
  return check_axiom_in(cat, axiom, f, parallel_partner(subjects), composable_partner(subjects),
                        strat);
}

std::vector<LawReport> check_axioms(const Model& model, const std::vector<AxiomId>& axioms,
                                    const std::vector<Morphism>& subjects,
                                    const EqualityStrategy& strat) {
  std::vector<LawReport> out;
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    std::vector<Morphism> rotated(subjects.begin() + static_cast<std::ptrdiff_t>(i),
                                  subjects.end());
    rotated.insert(rotated.end(), subjects.begin(),
                   subjects.begin() + static_cast<std::ptrdiff_t>(i));
    const EqualityStrategy sub = strat.subseeded(i);
    for (AxiomId id : axioms)
      out.push_back(check_axiom(model, id, rotated, sub));
  }
  return out;
}

PredicateResult is_linear(const Model& model, const Morphism& f, const EqualityStrategy& strat) {
  const BaseCategory cat(model);
  const Space& a = f.dom();
  PredicateResult result;
  const auto run = [&](const Morphism& m) {
    result.reports.push_back(check_axiom_in(cat, AxiomId::Linearity, m, m, m, strat));
  };
  run(f);
  result.holds = result.reports.front().passed();
  run(identity(a));
  if (a.kind() == SpaceKind::Product) {
    run(proj0(a.left(), a.right()));
    run(proj1(a.left(), a.right()));
  }
  run(zero_map(a, f.cod()));
  return result;
}

PredicateResult is_epsilon_linear(const Model& model, const Morphism& f,
                                  const EqualityStrategy& strat) {
  const BaseCategory cat(model);
  PredicateResult result;
  result.reports.push_back(check_axiom_in(cat, AxiomId::EpsLinearity, f, f, f, strat));
  result.holds = result.reports.front().passed();
  return result;
}

PredicateResult is_epsilon_vanishing(const Model& model, const Space& a,
                                     const EqualityStrategy& strat) {
  const BaseCategory cat(model);
  const Morphism id = identity(a);
  PredicateResult result;
  result.reports.push_back(check_axiom_in(cat, AxiomId::EpsVanishing, id, id, id, strat));
  result.reports.back().subject = a.to_string();
  result.holds = result.reports.front().passed();
  return result;
}

EqualityReport is_homomorphism(const Morphism& f, const EqualityStrategy& strat) {
  return check_additive(f, strat);
}

LawReport check_right_injectivity(const Model& model, const Space& a,
                                  const EqualityStrategy& strat) {
  const Morphism op = model.epsilon(identity(a));
  LawReport r;
  r.axiom = axiom_name(AxiomId::F4);
  r.model = model.name();
  r.subject = a.to_string();
  r.seed = strat.seed;
  const auto act = [&](const Element& x, const Element& y) { return add(a, x, op(y)); };
  const auto card = a.cardinality();
  const bool exhaustive = card && *card <= strat.bound / std::max<std::uint64_t>(*card, 1) &&
                          strat.mode != EqualityStrategy::Mode::Sampled;
  if (exhaustive) {
    r.strategy = "exhaustive(bound=" + std::to_string(strat.bound) + ")";
    // x (+) y = x + eps(y) is injective in y for every x iff it is for one x,
    // but the search below does not rely on that.
    const auto elements = enumerate(a, *card);
    for (const auto& x : elements) {
      // Keyed by rendering: bounded integers may leave the enumerated range.
      std::unordered_map<std::string, std::size_t> seen;
      for (std::size_t j = 0; j < elements.size(); ++j) {
        ++r.checked;
        const auto key = format_element(a, act(x, elements[j]));
        const auto [it, fresh] = seen.emplace(key, j);
        if (!fresh) {
          ++r.violations;
          if (!r.counterexample)
            r.counterexample = Counterexample{
                format_element(a, x) + " with " + format_element(a, elements[it->second]) +
                    " and " + format_element(a, elements[j]),
                format_element(a, act(x, elements[it->second])),
                format_element(a, act(x, elements[j]))};
        }
      }
    }
    r.status = r.violations == 0 ? Verdict::Pass : Verdict::Fail;
    return r;
  }
  r.strategy = "sampled(count=" + std::to_string(strat.count) +
               ", seed=" + std::to_string(strat.seed) + ")";
  Rng rng(strat.seed);
  const Element zero = zero_element(a);
  for (std::size_t s = 0; s < strat.count; ++s) {
    const Element x = random_element(a, rng);
    const Element y = random_element(a, rng);
    for (const Element& z : {zero, random_element(a, rng)}) {
      if (y == z)
        continue;
      ++r.checked;
      const Element u = act(x, y);
      const Element v = act(x, z);
      if (approx_equal(a, u, v, strat.abs_tol, strat.rel_tol)) {
        ++r.violations;
        if (!r.counterexample)
          r.counterexample = Counterexample{format_element(a, x) + " with " +
                                                format_element(a, z) + " and " +
                                                format_element(a, y),
                                            format_element(a, v), format_element(a, u)};
      }
    }
  }
  r.status = r.violations > 0 ? Verdict::Fail : Verdict::Unknown;
  return r;
}

std::vector<LawReport> check_flatness(const Model& model, const Space& a,
                                      const EqualityStrategy& strat) {
  const BaseCategory cat(model);
  const Morphism id = identity(a);
  std::vector<LawReport> out;
  out.push_back(structural_pass(model, AxiomId::F1, a.to_string(), strat));
  out.push_back(check_axiom_in(cat, AxiomId::F2, id, id, id, strat));
  out.back().subject = a.to_string();
  for (const auto& name : model.primitive_names()) {
    try {
      const Morphism prim = model.primitive(name, a);
      out.push_back(check_axiom_in(cat, AxiomId::F3, prim, prim, prim, strat));
    } catch (const ModelRestriction&) {
      // not defined at this space
    }
  }
  out.push_back(check_right_injectivity(model, a, strat));
  out.push_back(check_axiom_in(cat, AxiomId::OplusEps, id, id, id, strat));
  out.back().subject = a.to_string();
  return out;
}

StreamLinearReport stream_linear_check(const Model& model, const Morphism& f,
                                       const EqualityStrategy& strat) {
  StreamLinearReport r;
  r.linear = is_linear(model, f, strat).holds;
  r.homomorphism = is_homomorphism(f, strat).pass;
  // Compare f o z with f away from output index 0.
  const Space& cod = f.cod();
  const Morphism drop_head = truncation(cod);
  r.head_insensitive =
      morphisms_equal(compose(drop_head, compose(f, truncation(f.dom()))), compose(drop_head, f),
                      strat)
          .pass;
  r.agrees = r.linear == (r.homomorphism && r.head_insensitive);
  return r;
}

} // namespace diffcat
