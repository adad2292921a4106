#include "diffcat/models/module_maps.hpp"

#include "diffcat/errors.hpp"
#include "primitives.hpp"

namespace diffcat {

namespace {

EqualityStrategy admission_strategy() { return EqualityStrategy::automatic(128, 0x5eed, 4096); }

} // namespace

ModuleModel::ModuleModel(std::int64_t r) : Model(ModelTag{ModelTag::Kind::ModuleMaps, r}) {
  register_primitive("dbl", [](const Space& a) { return leaf_times(a, 2, "dbl"); });
  register_primitive("triple", [](const Space& a) { return leaf_times(a, 3, "triple"); });
  register_primitive("neg", [](const Space& a) { return leaf_times(a, -1, "neg"); });
}

Morphism ModuleModel::epsilon_at(const Space& a) const {
  return scale(scalar(), identity(a)).renamed("eps");
}

Morphism ModuleModel::epsilon(const Morphism& f) const {
  return module_epsilon(scalar(), f).with_model(tag());
}

Morphism ModuleModel::derivative(const Morphism& f) const {
  if (!f.traits().additive) {
    const auto report = check_additive(f, admission_strategy());
    if (!report.pass)
      throw NotAdditive(f.name() + " is not additive at " + report.counterexample->point);
  }
  return module_derivative(f).with_model(tag());
}

void ModuleModel::check_space(const Space& a) const {
  for (const auto& leaf : a.leaves())
    if (leaf.kind == LeafKind::Real || leaf.time >= 0)
      throw ModelRestriction("module model has no object " + a.to_string());
}

Space ModuleModel::default_space() const { return Space::integers(); }

Morphism ModuleModel::admit(const Morphism& f) const {
  Morphism g = Model::admit(f);
  if (g.traits().additive)
    return g;
  const auto report = check_additive(g, admission_strategy());
  if (!report.pass)
    throw NotAdditive(g.name() + " is not additive at " + report.counterexample->point);
  Traits t = g.traits();
  t.additive = true;
  return g.with_traits(t);
}

EqualityReport check_additive(const Morphism& f, const EqualityStrategy& strat) {
  const Space& a = f.dom();
  const Space aa = Space::product(a, a);
  const Morphism lhs = compose(f, add(proj0(a, a), proj1(a, a)));
  const Morphism rhs = add(compose(f, proj0(a, a)), compose(f, proj1(a, a)));
  EqualityReport report = morphisms_equal(lhs, rhs, strat);
  const Element at_zero = f(zero_element(a));
  if (!(at_zero == zero_element(f.cod()))) {
    ++report.violations;
    report.pass = false;
    if (!report.counterexample)
      report.counterexample = Counterexample{format_element(a, zero_element(a)),
                                             format_element(f.cod(), at_zero),
                                             format_element(f.cod(), zero_element(f.cod()))};
  }
  ++report.checked;
  return report;
}

Morphism module_derivative(const Morphism& f) {
  const Space& a = f.dom();
  Traits t = f.traits();
  t.additive = true;
  return compose(f, proj1(a, a)).renamed("d(" + f.name() + ")").with_traits(t);
}

Morphism module_epsilon(std::int64_t r, const Morphism& f) {
  return scale(r, f).renamed("eps(" + f.name() + ")");
}

} // namespace diffcat
