#include "diffcat/equality.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/rng.hpp"

#include <cmath>
#include <sstream>

namespace diffcat {

EqualityStrategy EqualityStrategy::exhaustive(std::uint64_t bound) {
  EqualityStrategy s;
  s.mode = Mode::Exhaustive;
  s.bound = bound;
  return s;
}

EqualityStrategy EqualityStrategy::sampled(std::size_t count, std::uint64_t seed) {
  EqualityStrategy s;
  s.mode = Mode::Sampled;
  s.count = count;
  s.seed = seed;
  return s;
}

EqualityStrategy EqualityStrategy::automatic(std::size_t count, std::uint64_t seed,
                                             std::uint64_t bound) {
  EqualityStrategy s;
  s.count = count;
  s.seed = seed;
  s.bound = bound;
  return s;
}

EqualityStrategy EqualityStrategy::subseeded(std::uint64_t index) const {
  EqualityStrategy s = *this;
  s.seed = derive_seed(seed, index);
  return s;
}

EqualityStrategy::Mode EqualityStrategy::resolve(const Space& space) const {
  switch (mode) {
  case Mode::Sampled:
    return Mode::Sampled;
  case Mode::Exhaustive: {
    const auto card = space.cardinality();
    if (!card)
      throw NotEnumerable(space.to_string() + " is not enumerable");
    if (*card > bound)
      throw SizeExceeded(space.to_string() + " has " + std::to_string(*card) +
                         " elements, over the bound " + std::to_string(bound));
    return Mode::Exhaustive;
  }
  case Mode::Auto:
    break;
  }
  return space.is_enumerable(bound) ? Mode::Exhaustive : Mode::Sampled;
}

std::string EqualityStrategy::describe() const {
  std::ostringstream out;
  switch (mode) {
  case Mode::Auto:
    out << "auto(count=" << count << ", seed=" << seed << ", bound=" << bound << ")";
    break;
  case Mode::Exhaustive:
    out << "exhaustive(bound=" << bound << ")";
    break;
  case Mode::Sampled:
    out << "sampled(count=" << count << ", seed=" << seed << ")";
    break;
  }
  return out.str();
}

std::uint64_t for_each_point(const Space& space, const EqualityStrategy& strat,
                             const std::function<bool(const Element&)>& visit) {
  std::uint64_t visited = 0;
  if (strat.resolve(space) == EqualityStrategy::Mode::Exhaustive) {
    const auto card = *space.cardinality();
    for (std::uint64_t i = 0; i < card; ++i) {
      ++visited;
      if (!visit(element_at(space, i)))
        break;
    }
    return visited;
  }
  Rng rng(strat.seed);
  for (std::size_t i = 0; i < strat.count; ++i) {
    ++visited;
    if (!visit(random_element(space, rng)))
      break;
  }
  return visited;
}

namespace {

bool all_finite(const Space& space, const Element& e) {
  const auto leaves = space.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i].kind == LeafKind::Real && !std::isfinite(e.real_at(i)))
      return false;
  return true;
}

} // namespace

EqualityReport morphisms_equal(const Morphism& f, const Morphism& g,
                               const EqualityStrategy& strat) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw DomainMismatch("cannot compare " + f.dom().to_string() + " -> " +
                         f.cod().to_string() + " with " + g.dom().to_string() + " -> " +
                         g.cod().to_string());
  EqualityReport report;
  report.mode = strat.resolve(f.dom());
  const Space& cod = f.cod();
  report.checked = for_each_point(f.dom(), strat, [&](const Element& x) {
    const Element a = f(x);
    const Element b = g(x);
    if (!all_finite(cod, a) || !all_finite(cod, b)) {
      ++report.skipped;
      return true;
    }
    if (!approx_equal(cod, a, b, strat.abs_tol, strat.rel_tol)) {
      ++report.violations;
      if (!report.counterexample) {
        report.counterexample = Counterexample{format_element(f.dom(), x),
                                               format_element(cod, a), format_element(cod, b)};
        report.witness = x;
      }
    }
    return true;
  });
  report.checked -= report.skipped;
  report.pass = report.violations == 0;
  return report;
}

} // namespace diffcat
