#pragma once

#include "diffcat/equality.hpp"
#include "diffcat/law_report.hpp"
#include "diffcat/morphism.hpp"

#include <vector>

namespace diffcat {

// Closed structure of the finite-difference model over finite groups.
// Exponentials are the function spaces (A => B), tabulated in the
// enumeration order of A, with the pointwise group structure.

/// ev : (A => B) x A -> B.
Morphism ev(const Space& a, const Space& b);
/// f : A x B -> C  gives  curry(f) : A -> (B => C). NotFinite when B does
/// not enumerate within the default bound.
Morphism curry(const Morphism& f);
/// g : A -> (B => C)  gives  uncurry(g) = ev o (g x 1) : A x B -> C.
Morphism uncurry(const Morphism& g);
/// sw((a,b),c) = ((a,c),b) : (A x B) x C -> (A x C) x B.
Morphism sw(const Space& a, const Space& b, const Space& c);

/// Every map dom -> cod, as tables, in enumeration order of (dom => cod).
std::vector<Morphism> all_functions(const Space& dom, const Space& cod,
                                    std::uint64_t bound = kDefaultEnumerationBound);

/// curry(f + g) = curry(f) + curry(g) and curry(0) = 0, subject i paired
/// with subject i+1.
LawReport check_closed_left_additive(const std::vector<Morphism>& subjects,
                                     const EqualityStrategy& strat);

/// For f : A x B -> C in findiff:
///   d[curry f] = curry(d[f] o <(x, y), (u, 0)>)  on ((x, u), y)
///   curry(eps f) = eps(curry f).
LawReport check_dlambda_axioms(const Morphism& f, const EqualityStrategy& strat);

/// For g : A x B -> C and f : A -> B in findiff, the two decompositions of
/// d[ev <curry g, f>]:
///   (i)  ev <d[curry g], f pi0> + d[g] <<pi0 + eps pi1, f pi0>, <0, d[f]>>
///   (ii) ev <d[curry g], f pi0 + eps d[f]> + d[g] <<pi0, f pi0>, <0, d[f]>>
LawReport check_ev_derivative_identities(const Morphism& g, const Morphism& f,
                                         const EqualityStrategy& strat);

/// uncurry(curry f) = f, curry(uncurry(curry f)) = curry f and sw sw = 1.
LawReport check_curry_roundtrip(const Morphism& f, const EqualityStrategy& strat);

} // namespace diffcat
