#pragma once

#include "diffcat/model.hpp"

namespace diffcat {

/// Euclidean spaces with directional derivatives computed over dual numbers;
/// epsilon = 0, so the induced action is x (+) y = x.
class SmoothModel : public Model {
public:
  SmoothModel();

  Morphism epsilon_at(const Space& a) const override;
  Morphism epsilon(const Morphism& f) const override;
  Morphism derivative(const Morphism& f) const override;
  void check_space(const Space& a) const override;
  Space default_space() const override;
};

/// D[f](x, y), evaluated by seeding a fresh infinitesimal with y. Needs a
/// dual evaluator on f (UnsupportedPrimitive otherwise); the result carries
/// one again, so it can be differentiated further.
Morphism smooth_derivative(const Morphism& f);

} // namespace diffcat
