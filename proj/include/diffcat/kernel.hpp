#pragma once

#include "diffcat/axioms.hpp"
#include "diffcat/change_action.hpp"
#include "diffcat/equality.hpp"
#include "diffcat/law_report.hpp"
#include "diffcat/model.hpp"

#include <vector>

namespace diffcat {

Morphism epsilon(const Model& model, const Morphism& f);
Morphism derivative(const Model& model, const Morphism& f);
/// f (+) g = f + eps(g), for parallel f and g.
Morphism oplus(const Model& model, const Morphism& f, const Morphism& g);

/// Checks one axiom on subjects[0]. Partners are drawn from the remaining
/// subjects: the first one parallel to subjects[0] for sums and pairings and
/// the first one composable after it for the chain rule; subjects[0] itself
/// (or an identity) stands in when none fits.
LawReport check_axiom(const Model& model, AxiomId axiom, const std::vector<Morphism>& subjects,
                      const EqualityStrategy& strat);

/// Every axiom on every subject; subject i pairs with subject i+1 and uses
/// the strategy subseeded with i. Reports are ordered subject-major.
std::vector<LawReport> check_axioms(const Model& model, const std::vector<AxiomId>& axioms,
                                    const std::vector<Morphism>& subjects,
                                    const EqualityStrategy& strat);

struct PredicateResult {
  bool holds = false;
  std::vector<LawReport> reports;
};

/// d[f] = f o pi1. The reports also cover id, pi0, pi1 and 0 on dom f.
PredicateResult is_linear(const Model& model, const Morphism& f, const EqualityStrategy& strat);
/// eps(f) is linear.
PredicateResult is_epsilon_linear(const Model& model, const Morphism& f,
                                  const EqualityStrategy& strat);
/// eps(1_A) = 0.
PredicateResult is_epsilon_vanishing(const Model& model, const Space& a,
                                     const EqualityStrategy& strat);

/// f(x + y) = f(x) + f(y) and f(0) = 0.
EqualityReport is_homomorphism(const Morphism& f, const EqualityStrategy& strat);

/// Right-injectivity of (+) on A: exhaustive search for x, y != z with
/// x (+) y = x (+) z when A x A enumerates within the bound; otherwise a
/// sampled search that reports Fail on a witness and Unknown without one.
LawReport check_right_injectivity(const Model& model, const Space& a,
                                  const EqualityStrategy& strat);

/// F1 (structural), F2, F3 on every registered primitive instantiable at A,
/// F4 and the oplus-epsilon identity.
std::vector<LawReport> check_flatness(const Model& model, const Space& a,
                                      const EqualityStrategy& strat);

struct StreamLinearReport {
  bool linear = false;
  bool homomorphism = false;
  bool head_insensitive = false;
  /// linear <=> (homomorphism and head_insensitive)
  bool agrees = false;
};

/// Compares is_linear with the stream characterization: a homomorphism whose
/// outputs at indices >= 1 ignore input index 0, i.e. f(z b)_{n+1} = f(b)_{n+1}.
StreamLinearReport stream_linear_check(const Model& model, const Morphism& f,
                                       const EqualityStrategy& strat);

} // namespace diffcat
