#include "primitives.hpp"

#include "diffcat/errors.hpp"

namespace diffcat {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in multiplication");
  return out;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in addition");
  return out;
}

} // namespace

Morphism leaf_square(const Space& a) {
  return leafwise_map(
      a, "sq", [](std::int64_t x) { return mul_checked(x, x); },
      [](const DualNumber& x) { return x * x; }, Traits{false, true});
}

Morphism leaf_increment(const Space& a) {
  return leafwise_map(
      a, "inc", [](std::int64_t x) { return add_checked(x, 1); },
      [](const DualNumber& x) { return x + DualNumber(1.0); }, Traits{false, true});
}

Morphism leaf_cube(const Space& a) {
  return leafwise_map(
      a, "cube", [](std::int64_t x) { return mul_checked(mul_checked(x, x), x); },
      [](const DualNumber& x) { return x * x * x; }, Traits{false, true});
}

Morphism leaf_times(const Space& a, std::int64_t k, const std::string& name) {
  return leafwise_map(
      a, name, [k](std::int64_t x) { return mul_checked(k, x); },
      [k](const DualNumber& x) { return DualNumber(static_cast<double>(k)) * x; },
      Traits{true, true});
}

void register_polynomial_primitives(Model& model) {
  model.register_primitive("sq", leaf_square);
  model.register_primitive("inc", leaf_increment);
  model.register_primitive("cube", leaf_cube);
  model.register_primitive("dbl", [](const Space& a) { return leaf_times(a, 2, "dbl"); });
  model.register_primitive("neg", [](const Space& a) { return leaf_times(a, -1, "neg"); });
}

} // namespace diffcat
