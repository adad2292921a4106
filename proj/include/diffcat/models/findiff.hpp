#pragma once

#include "diffcat/model.hpp"

namespace diffcat {

/// Abelian groups with finite differences: epsilon = id and
/// d[f](x, y) = f(x + y) - f(x).
class FinDiffModel : public Model {
public:
  FinDiffModel();

  Morphism epsilon_at(const Space& a) const override;
  Morphism epsilon(const Morphism& f) const override;
  Morphism derivative(const Morphism& f) const override;
  void check_space(const Space& a) const override;
  Space default_space() const override;
};

Morphism findiff_derivative(const Morphism& f);

} // namespace diffcat
