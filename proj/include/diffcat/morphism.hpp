#pragma once

#include "diffcat/dual_number.hpp"
#include "diffcat/element.hpp"
#include "diffcat/space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace diffcat {

/// Which concrete difference model a morphism lives in.
struct ModelTag {
  enum class Kind { FinDiff, Smooth, ModuleMaps, Streams };
  Kind kind = Kind::FinDiff;
  std::int64_t r = 2; // ModuleMaps scalar
  int k = 16;         // Streams prefix length

  /// `findiff`, `smooth`, `module:r=<int>`, `streams:k=<int>`.
  std::string to_string() const;
  static ModelTag parse(std::string_view text);

  friend bool operator==(const ModelTag&, const ModelTag&) = default;
};

using DualVec = boost::container::small_vector<DualNumber, 4>;
inline std::span<const DualNumber> view(const DualVec& v) noexcept {
  return {v.data(), v.size()};
}

using EvalFn = std::function<Element(const Element&)>;
/// Leafwise evaluation over dual numbers; present on maps between real spaces
/// built from the smooth grammar.
using DualFn = std::function<DualVec(std::span<const DualNumber>)>;

/// Facts a combinator can propagate without evaluating anything.
struct Traits {
  bool additive = false; // f(x+y) = f(x)+f(y) and f(0) = 0
  bool causal = false;   // stream outputs at index i read inputs 0..i only
};

/// A typed, immutable map between spaces. Copies share the evaluator.
class Morphism {
public:
  Morphism(Space dom, Space cod, EvalFn eval, std::string name, Traits traits = {},
           DualFn dual = nullptr);

  const Space& dom() const noexcept { return impl_->dom; }
  const Space& cod() const noexcept { return impl_->cod; }
  const std::string& name() const noexcept { return impl_->name; }
  const Traits& traits() const noexcept { return impl_->traits; }
  const std::optional<ModelTag>& model() const noexcept { return impl_->model; }

  Element operator()(const Element& x) const { return impl_->eval(x); }

  bool has_dual() const noexcept { return static_cast<bool>(impl_->dual); }
  DualVec eval_dual(std::span<const DualNumber> x) const { return impl_->dual(x); }
  const EvalFn& evaluator() const noexcept { return impl_->eval; }
  const DualFn& dual_evaluator() const noexcept { return impl_->dual; }

  Morphism renamed(std::string name) const;
  Morphism with_traits(Traits traits) const;
  Morphism with_model(ModelTag tag) const;

  /// Same underlying evaluator object.
  bool same_as(const Morphism& other) const noexcept { return impl_ == other.impl_; }

private:
  struct Impl {
    Space dom;
    Space cod;
    EvalFn eval;
    DualFn dual;
    std::string name;
    Traits traits;
    std::optional<ModelTag> model;
  };
  std::shared_ptr<const Impl> impl_;
};

// Structural maps. These carry dual evaluators and are additive.
Morphism identity(const Space& a);
Morphism proj0(const Space& left, const Space& right);
Morphism proj1(const Space& left, const Space& right);
/// The unique map into the terminal space, which is also the zero map.
Morphism terminal_map(const Space& a);
Morphism zero_map(const Space& dom, const Space& cod);

// Combinators. Shapes are checked and violations raise DomainMismatch.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism pair(const Morphism& f, const Morphism& g);
Morphism add(const Morphism& f, const Morphism& g);
Morphism negate(const Morphism& f);
Morphism subtract(const Morphism& f, const Morphism& g);
Morphism scale(std::int64_t k, const Morphism& f);
/// f × g : A×C → B×D.
Morphism product_map(const Morphism& f, const Morphism& g);

/// The map dom → cod constantly equal to `value`.
Morphism constant(const Space& dom, const Space& cod, const Element& value);

/// Lookup table indexed by the enumeration order of dom.
Morphism from_table(const Space& dom, const Space& cod, std::vector<Element> table,
                    std::string name, Traits traits = {});

/// Leafwise endomorphism applying `int_op` to integer and cyclic leaves
/// (cyclic results are reduced) and `real_op` to real leaves.
Morphism leafwise_map(const Space& a, std::string name,
                      std::function<std::int64_t(std::int64_t)> int_op,
                      std::function<DualNumber(const DualNumber&)> real_op,
                      Traits traits = {});

/// Splits a flat dual vector at the boundary of a product's left factor.
DualVec dual_slice(std::span<const DualNumber> x, std::size_t offset, std::size_t count);

// Convenience projections out of right-nested powers A^k.
/// The i-th factor of power(a, k).
Morphism power_proj(const Space& a, int k, int i);

} // namespace diffcat
