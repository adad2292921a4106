#include "diffcat/models/smooth.hpp"

#include "diffcat/errors.hpp"
#include "primitives.hpp"

namespace diffcat {

SmoothModel::SmoothModel() : Model(ModelTag{ModelTag::Kind::Smooth}) {
  const auto no_int = [](std::int64_t) -> std::int64_t {
    throw ModelRestriction("smooth primitives act on real leaves only");
  };
  const auto unary = [no_int](std::string name, DualNumber (*fn)(const DualNumber&)) {
    return [no_int, name, fn](const Space& a) {
      return leafwise_map(a, name, no_int, fn, Traits{false, true});
    };
  };
  register_primitive("sin", unary("sin", [](const DualNumber& x) { return sin(x); }));
  register_primitive("cos", unary("cos", [](const DualNumber& x) { return cos(x); }));
  register_primitive("exp", unary("exp", [](const DualNumber& x) { return exp(x); }));
  register_primitive("sq", leaf_square);
  register_primitive("cube", leaf_cube);
}

Morphism SmoothModel::epsilon_at(const Space& a) const { return zero_map(a, a); }

Morphism SmoothModel::epsilon(const Morphism& f) const {
  return zero_map(f.dom(), f.cod()).renamed("eps(" + f.name() + ")");
}

Morphism SmoothModel::derivative(const Morphism& f) const {
  return smooth_derivative(f).with_model(tag());
}

void SmoothModel::check_space(const Space& a) const {
  if (!a.all_real())
    throw ModelRestriction("smooth has no object " + a.to_string());
}

Space SmoothModel::default_space() const { return Space::real(1); }

namespace {

int max_order(std::span<const DualNumber> x) {
  int k = 0;
  for (const auto& v : x)
    k = std::max(k, v.order());
  return k;
}

} // namespace

Morphism smooth_derivative(const Morphism& f) {
  if (!f.has_dual())
    throw UnsupportedPrimitive(f.name() + " is outside the smooth primitive grammar");
  const Space& a = f.dom();
  const auto n = a.leaf_count();
  const DualFn fd = f.dual_evaluator();

  // Every input leaf is lifted to a common order k before the new
  // infinitesimal e_k is attached, so all leaves share the same seed.
  DualFn dual = [n, fd](std::span<const DualNumber> xy) {
    const int k = max_order(xy);
    DualVec seeded;
    seeded.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      seeded.push_back(xy[i].lifted(k).with_tangent(xy[n + i].lifted(k)));
    const DualVec out = fd(view(seeded));
    DualVec result;
    result.reserve(out.size());
    for (const auto& v : out)
      result.push_back(v.lifted(k + 1).tangent_part());
    return result;
  };
  return Morphism(
      Space::product(a, a), f.cod(),
      [dual](const Element& xy) {
        DualVec in;
        in.reserve(xy.size());
        for (std::size_t i = 0; i < xy.size(); ++i)
          in.emplace_back(xy.real_at(i));
        const DualVec out = dual(view(in));
        Element result(out.size());
        for (std::size_t i = 0; i < out.size(); ++i)
          result.set_real(i, out[i].primal());
        return result;
      },
      "d(" + f.name() + ")", f.traits(), dual);
}

} // namespace diffcat
