#include "diffcat/models/findiff.hpp"

#include "diffcat/errors.hpp"
#include "primitives.hpp"

namespace diffcat {

FinDiffModel::FinDiffModel() : Model(ModelTag{ModelTag::Kind::FinDiff}) {
  register_polynomial_primitives(*this);
}

Morphism FinDiffModel::epsilon_at(const Space& a) const { return identity(a); }

Morphism FinDiffModel::epsilon(const Morphism& f) const {
  return f.renamed("eps(" + f.name() + ")");
}

Morphism FinDiffModel::derivative(const Morphism& f) const {
  return findiff_derivative(f).with_model(tag());
}

void FinDiffModel::check_space(const Space& a) const {
  for (const auto& leaf : a.leaves())
    if (leaf.kind == LeafKind::Real || leaf.time >= 0)
      throw ModelRestriction("findiff has no object " + a.to_string());
}

Space FinDiffModel::default_space() const { return Space::integers(); }

Morphism findiff_derivative(const Morphism& f) {
  if (!f.cod().has_negation())
    throw NoNegation("finite differences need negation on " + f.cod().to_string());
  const Space& a = f.dom();
  const auto n = a.leaf_count();
  return Morphism(
      Space::product(a, a), f.cod(),
      [a, n, cod = f.cod(), fe = f.evaluator()](const Element& xy) {
        const Element x = xy.slice(0, n);
        const Element y = xy.slice(n, n);
        return subtract(cod, fe(add(a, x, y)), fe(x));
      },
      "d(" + f.name() + ")", f.traits());
}

} // namespace diffcat
