#pragma once

#include "diffcat/model.hpp"

#include <cstdint>

namespace diffcat {

/// Leafwise x^2, x+1, x^3, 2x, -x, overflow checked on integer leaves.
Morphism leaf_square(const Space& a);
Morphism leaf_increment(const Space& a);
Morphism leaf_cube(const Space& a);
Morphism leaf_times(const Space& a, std::int64_t k, const std::string& name);

/// Registers sq, inc, cube, dbl and neg.
void register_polynomial_primitives(Model& model);

} // namespace diffcat
