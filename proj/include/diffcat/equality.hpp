#pragma once

#include "diffcat/element.hpp"
#include "diffcat/morphism.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace diffcat {

/// How extensional equality of two maps is decided on a finite test set.
struct EqualityStrategy {
  /// Auto resolves to Exhaustive when the domain enumerates within `bound`,
  /// otherwise to Sampled.
  enum class Mode { Auto, Exhaustive, Sampled };

  Mode mode = Mode::Auto;
  std::size_t count = 256;
  std::uint64_t seed = 0;
  double abs_tol = 1e-9;
  double rel_tol = 1e-6;
  std::uint64_t bound = kDefaultEnumerationBound;

  static EqualityStrategy exhaustive(std::uint64_t bound = kDefaultEnumerationBound);
  static EqualityStrategy sampled(std::size_t count, std::uint64_t seed);
  static EqualityStrategy automatic(std::size_t count, std::uint64_t seed,
                                    std::uint64_t bound = kDefaultEnumerationBound);

  /// The same strategy reseeded with derive_seed(seed, index).
  EqualityStrategy subseeded(std::uint64_t index) const;

  /// Concrete mode used for `space`. Exhaustive on a space it cannot
  /// enumerate raises NotEnumerable or SizeExceeded.
  Mode resolve(const Space& space) const;

  std::string describe() const;
};

/// Calls `visit` on every test point of `space` in a fixed order; stops early
/// when `visit` returns false. Returns the number of points visited.
std::uint64_t for_each_point(const Space& space, const EqualityStrategy& strat,
                             const std::function<bool(const Element&)>& visit);

struct Counterexample {
  std::string point;
  std::string lhs;
  std::string rhs;
};

struct EqualityReport {
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Points where either side left the finite reals; not counted in checked.
  std::uint64_t skipped = 0;
  std::optional<Counterexample> counterexample;
  std::optional<Element> witness;
  EqualityStrategy::Mode mode = EqualityStrategy::Mode::Exhaustive;
};

/// Extensional comparison of f and g over the strategy's test set. The
/// counterexample is the first failing point in test order. Points whose
/// real outputs overflow to inf or nan on either side are skipped.
EqualityReport morphisms_equal(const Morphism& f, const Morphism& g,
                               const EqualityStrategy& strat);

} // namespace diffcat
