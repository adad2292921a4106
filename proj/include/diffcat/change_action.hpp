#pragma once

#include "diffcat/law_report.hpp"
#include "diffcat/morphism.hpp"

#include <optional>
#include <vector>

namespace diffcat {

class Model;

/// (A, dA, (+), +, 0): a monoid of changes dA acting on A.
struct ChangeActionStruct {
  Space base;
  Space delta;
  Morphism oplus; // A x dA -> A
  Morphism plus;  // dA x dA -> dA
  Morphism zero;  // 1 -> dA
};

/// The action every object carries in a difference model:
/// (A, A, pi0 + eps(pi1), +, 0).
ChangeActionStruct induced_action(const Model& model, const Space& a);

/// Monoid laws of (dA, +, 0), the two action laws, and the derived identities
/// on parallel maps (unit and associativity of the pointwise sum, action by
/// zero and by a sum, and precomposition). The last uses `reindex`, an
/// endomorphism of the point space, when given, and doubling otherwise.
std::vector<LawReport> check_change_action(const ChangeActionStruct& ca,
                                           const EqualityStrategy& strat,
                                           const std::string& label = "change-action",
                                           const std::optional<Morphism>& reindex = {});

/// df is a derivative of f between the two change actions:
///   f(x (+) y) = f(x) (+) df(x, y)
///   df(x, y + z) = df(x, y) + df(x (+) y, z)  and  df(x, 0) = 0.
std::vector<LawReport> check_cad_derivative(const Morphism& f, const Morphism& df,
                                            const ChangeActionStruct& ca_a,
                                            const ChangeActionStruct& ca_b,
                                            const EqualityStrategy& strat,
                                            const std::string& label = "change-action");

} // namespace diffcat
