#pragma once

#include "diffcat/model.hpp"

#include <cstdint>
#include <vector>

namespace diffcat {

class Rng;

/// Uniformly drawn lookup table dom -> cod; both spaces must enumerate
/// within the default bound.
Morphism random_table(const Space& dom, const Space& cod, Rng& rng, const std::string& name);

/// Leafwise c0 + c1 x + ... + cd x^d with integer coefficients in [-3, 3].
Morphism random_polynomial(const Space& a, int max_degree, Rng& rng, const std::string& name);

/// Leafwise-linear endomorphism out_i = sum_j c_ij x_j, with coefficients
/// restricted to those that are well defined between the leaf groups.
Morphism random_homomorphism(const Space& a, Rng& rng, const std::string& name);

/// Causal stream map built from pointwise polynomials, running sums, delays,
/// products with the previous index and (over cyclic bases) window tables
/// out_n = T(a_n, a_{n-1}), combined by composition and sums with total
/// degree at most 4.
Morphism random_stream_map(const Space& a, Rng& rng);

/// `count` random subjects for `model` at `space`, admitted by the model:
/// tables over finite spaces and polynomials over integers in findiff,
/// grammar expressions in smooth, homomorphisms in module, stream maps in
/// streams.
std::vector<Morphism> generate_subjects(const Model& model, const Space& space, std::size_t count,
                                        std::uint64_t seed);

/// Every registered primitive that instantiates at `space`.
std::vector<Morphism> primitive_subjects(const Model& model, const Space& space);

} // namespace diffcat
