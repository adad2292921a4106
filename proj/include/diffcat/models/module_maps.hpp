#pragma once

#include "diffcat/equality.hpp"
#include "diffcat/model.hpp"

namespace diffcat {

/// Z-modules and module homomorphisms with epsilon = r * (-) and
/// d[f] = f o pi1. Only additive maps are admitted.
class ModuleModel : public Model {
public:
  explicit ModuleModel(std::int64_t r = 2);

  std::int64_t scalar() const noexcept { return tag().r; }

  Morphism epsilon_at(const Space& a) const override;
  Morphism epsilon(const Morphism& f) const override;
  Morphism derivative(const Morphism& f) const override;
  void check_space(const Space& a) const override;
  Space default_space() const override;
  /// Rejects maps failing the extensional additivity check with NotAdditive.
  Morphism admit(const Morphism& f) const override;
};

/// f(x + y) = f(x) + f(y) and f(0) = 0, checked over dom x dom.
EqualityReport check_additive(const Morphism& f, const EqualityStrategy& strat);

Morphism module_derivative(const Morphism& f);
Morphism module_epsilon(std::int64_t r, const Morphism& f);

} // namespace diffcat
