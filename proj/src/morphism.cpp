#include "diffcat/morphism.hpp"

#include "diffcat/errors.hpp"

#include <charconv>

namespace diffcat {

std::string ModelTag::to_string() const {
  switch (kind) {
  case Kind::FinDiff:
    return "findiff";
  case Kind::Smooth:
    return "smooth";
  case Kind::ModuleMaps:
    return "module:r=" + std::to_string(r);
  case Kind::Streams:
    return "streams:k=" + std::to_string(k);
  }
  return "?";
}

namespace {

std::int64_t parse_param(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix)
    throw ParseError("bad model '" + std::string(text) + "'");
  const auto digits = text.substr(prefix.size());
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("bad model parameter in '" + std::string(text) + "'");
  return v;
}

} // namespace

ModelTag ModelTag::parse(std::string_view text) {
  ModelTag tag;
  if (text == "findiff") {
    tag.kind = Kind::FinDiff;
  } else if (text == "smooth") {
    tag.kind = Kind::Smooth;
  } else if (text == "module") {
    tag.kind = Kind::ModuleMaps;
  } else if (text.starts_with("module:")) {
    tag.kind = Kind::ModuleMaps;
    tag.r = parse_param(text, "module:r=");
  } else if (text == "streams") {
    tag.kind = Kind::Streams;
  } else if (text.starts_with("streams:")) {
    tag.kind = Kind::Streams;
    const auto k = parse_param(text, "streams:k=");
    if (k <= 0)
      throw ParseError("stream prefix length must be positive");
    tag.k = static_cast<int>(k);
  } else {
    throw ParseError("unknown model '" + std::string(text) +
                     "' (expected findiff | smooth | module:r=<int> | streams:k=<int>)");
  }
  return tag;
}

Morphism::Morphism(Space dom, Space cod, EvalFn eval, std::string name, Traits traits,
                   DualFn dual)
    : impl_(std::make_shared<const Impl>(Impl{std::move(dom), std::move(cod),
                                              std::move(eval), std::move(dual),
                                              std::move(name), traits, std::nullopt})) {}

Morphism Morphism::renamed(std::string name) const {
  Morphism out = *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  out.impl_ = std::move(impl);
  return out;
}

Morphism Morphism::with_traits(Traits traits) const {
  Morphism out = *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->traits = traits;
  out.impl_ = std::move(impl);
  return out;
}

Morphism Morphism::with_model(ModelTag tag) const {
  Morphism out = *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->model = tag;
  out.impl_ = std::move(impl);
  return out;
}

DualVec dual_slice(std::span<const DualNumber> x, std::size_t offset, std::size_t count) {
  return DualVec(x.begin() + static_cast<std::ptrdiff_t>(offset),
                 x.begin() + static_cast<std::ptrdiff_t>(offset + count));
}

namespace {

constexpr Traits kLinear{true, true};

Traits both(const Morphism& f, const Morphism& g) {
  return {f.traits().additive && g.traits().additive,
          f.traits().causal && g.traits().causal};
}

void require_same_shape(const Morphism& f, const Morphism& g, const char* what) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw DomainMismatch(std::string(what) + ": " + f.name() + " : " + f.dom().to_string() +
                         " -> " + f.cod().to_string() + " vs " + g.name() + " : " +
                         g.dom().to_string() + " -> " + g.cod().to_string());
}

DualFn slice_dual(std::size_t offset, std::size_t count) {
  return [offset, count](std::span<const DualNumber> x) { return dual_slice(x, offset, count); };
}

DualFn zeros_dual(std::size_t count) {
  return [count](std::span<const DualNumber>) { return DualVec(count, DualNumber(0.0)); };
}

} // namespace

Morphism identity(const Space& a) {
  return Morphism(a, a, [](const Element& x) { return x; }, "id", kLinear,
                  [](std::span<const DualNumber> x) { return DualVec(x.begin(), x.end()); });
}

Morphism proj0(const Space& left, const Space& right) {
  const auto n = left.leaf_count();
  return Morphism(Space::product(left, right), left,
                  [n](const Element& x) { return x.slice(0, n); }, "pi0", kLinear,
                  slice_dual(0, n));
}

Morphism proj1(const Space& left, const Space& right) {
  const auto off = left.leaf_count();
  const auto n = right.leaf_count();
  return Morphism(Space::product(left, right), right,
                  [off, n](const Element& x) { return x.slice(off, n); }, "pi1", kLinear,
                  slice_dual(off, n));
}

Morphism terminal_map(const Space& a) {
  return Morphism(a, Space::terminal(), [](const Element&) { return Element(); }, "one",
                  kLinear, zeros_dual(0));
}

Morphism zero_map(const Space& dom, const Space& cod) {
  const Element z = zero_element(cod);
  DualFn dual = cod.all_real() ? zeros_dual(cod.leaf_count()) : nullptr;
  return Morphism(dom, cod, [z](const Element&) { return z; }, "zero", kLinear,
                  std::move(dual));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod() == g.dom()))
    throw DomainMismatch("cannot compose " + g.name() + " : " + g.dom().to_string() +
                         " -> ... after " + f.name() + " : ... -> " + f.cod().to_string());
  DualFn dual;
  if (f.has_dual() && g.has_dual())
    dual = [gd = g.dual_evaluator(), fd = f.dual_evaluator()](std::span<const DualNumber> x) {
      const DualVec mid = fd(x);
      return gd(view(mid));
    };
  return Morphism(
      f.dom(), g.cod(),
      [ge = g.evaluator(), fe = f.evaluator()](const Element& x) { return ge(fe(x)); },
      "comp(" + g.name() + ", " + f.name() + ")", both(f, g), std::move(dual));
}

Morphism pair(const Morphism& f, const Morphism& g) {
  if (!(f.dom() == g.dom()))
    throw DomainMismatch("cannot pair " + f.name() + " : " + f.dom().to_string() +
                         " -> ... with " + g.name() + " : " + g.dom().to_string() + " -> ...");
  DualFn dual;
  if (f.has_dual() && g.has_dual())
    dual = [fd = f.dual_evaluator(), gd = g.dual_evaluator()](std::span<const DualNumber> x) {
      DualVec out = fd(x);
      const DualVec right = gd(x);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    };
  return Morphism(
      f.dom(), Space::product(f.cod(), g.cod()),
      [fe = f.evaluator(), ge = g.evaluator()](const Element& x) {
        return pair_elements(fe(x), ge(x));
      },
      "pair(" + f.name() + ", " + g.name() + ")", both(f, g), std::move(dual));
}

Morphism add(const Morphism& f, const Morphism& g) {
  require_same_shape(f, g, "cannot add");
  DualFn dual;
  if (f.has_dual() && g.has_dual() && f.cod().all_real())
    dual = [fd = f.dual_evaluator(), gd = g.dual_evaluator()](std::span<const DualNumber> x) {
      DualVec out = fd(x);
      const DualVec right = gd(x);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += right[i];
      return out;
    };
  return Morphism(
      f.dom(), f.cod(),
      [cod = f.cod(), fe = f.evaluator(), ge = g.evaluator()](const Element& x) {
        return add(cod, fe(x), ge(x));
      },
      "add(" + f.name() + ", " + g.name() + ")", both(f, g), std::move(dual));
}

Morphism negate(const Morphism& f) { return scale(-1, f).renamed("neg(" + f.name() + ")"); }

Morphism subtract(const Morphism& f, const Morphism& g) {
  require_same_shape(f, g, "cannot subtract");
  DualFn dual;
  if (f.has_dual() && g.has_dual() && f.cod().all_real())
    dual = [fd = f.dual_evaluator(), gd = g.dual_evaluator()](std::span<const DualNumber> x) {
      DualVec out = fd(x);
      const DualVec right = gd(x);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= right[i];
      return out;
    };
  return Morphism(
      f.dom(), f.cod(),
      [cod = f.cod(), fe = f.evaluator(), ge = g.evaluator()](const Element& x) {
        return subtract(cod, fe(x), ge(x));
      },
      "sub(" + f.name() + ", " + g.name() + ")", both(f, g), std::move(dual));
}

Morphism scale(std::int64_t k, const Morphism& f) {
  DualFn dual;
  if (f.has_dual() && f.cod().all_real())
    dual = [k, fd = f.dual_evaluator()](std::span<const DualNumber> x) {
      DualVec out = fd(x);
      for (auto& v : out)
        v *= DualNumber(static_cast<double>(k));
      return out;
    };
  return Morphism(
      f.dom(), f.cod(),
      [k, cod = f.cod(), fe = f.evaluator()](const Element& x) { return scale(cod, k, fe(x)); },
      "scale(" + std::to_string(k) + ", " + f.name() + ")", f.traits(), std::move(dual));
}

Morphism product_map(const Morphism& f, const Morphism& g) {
  const auto n = f.dom().leaf_count();
  const auto m = g.dom().leaf_count();
  DualFn dual;
  if (f.has_dual() && g.has_dual())
    dual = [n, m, fd = f.dual_evaluator(), gd = g.dual_evaluator()](
               std::span<const DualNumber> x) {
      DualVec out = fd(x.subspan(0, n));
      const DualVec right = gd(x.subspan(n, m));
      out.insert(out.end(), right.begin(), right.end());
      return out;
    };
  return Morphism(
      Space::product(f.dom(), g.dom()), Space::product(f.cod(), g.cod()),
      [n, m, fe = f.evaluator(), ge = g.evaluator()](const Element& x) {
        return pair_elements(fe(x.slice(0, n)), ge(x.slice(n, m)));
      },
      "prod(" + f.name() + ", " + g.name() + ")", both(f, g), std::move(dual));
}

Morphism constant(const Space& dom, const Space& cod, const Element& value) {
  if (value.size() != cod.leaf_count())
    throw TypeMismatch("constant does not fit " + cod.to_string());
  DualFn dual;
  if (cod.all_real())
    dual = [cod, value](std::span<const DualNumber>) {
      DualVec out;
      for (std::size_t i = 0; i < value.size(); ++i)
        out.emplace_back(value.real_at(i));
      return out;
    };
  Traits traits;
  traits.causal = true;
  return Morphism(dom, cod, [value](const Element&) { return value; },
                  "const(" + format_element(cod, value) + ")", traits, std::move(dual));
}

Morphism from_table(const Space& dom, const Space& cod, std::vector<Element> table,
                    std::string name, Traits traits) {
  const auto card = dom.cardinality();
  if (!card || *card != table.size())
    throw TypeMismatch("table of " + std::to_string(table.size()) + " entries for " +
                       dom.to_string());
  for (const auto& e : table)
    if (e.size() != cod.leaf_count())
      throw TypeMismatch("table entry does not fit " + cod.to_string());
  auto shared = std::make_shared<const std::vector<Element>>(std::move(table));
  return Morphism(
      dom, cod,
      [dom, shared](const Element& x) { return (*shared)[index_of(dom, x)]; },
      std::move(name), traits);
}

Morphism leafwise_map(const Space& a, std::string name,
                      std::function<std::int64_t(std::int64_t)> int_op,
                      std::function<DualNumber(const DualNumber&)> real_op, Traits traits) {
  const auto leaves = std::vector<LeafSpec>(a.leaves().begin(), a.leaves().end());
  DualFn dual;
  if (a.all_real() && real_op)
    dual = [real_op](std::span<const DualNumber> x) {
      DualVec out;
      for (const auto& v : x)
        out.push_back(real_op(v));
      return out;
    };
  return Morphism(
      a, a,
      [leaves, int_op, real_op](const Element& x) {
        Element out(leaves.size());
        for (std::size_t i = 0; i < leaves.size(); ++i) {
          switch (leaves[i].kind) {
          case LeafKind::Cyclic: {
            const auto n = leaves[i].modulus;
            const auto v = int_op(x.int_at(i)) % n;
            out.set_int(i, v < 0 ? v + n : v);
            break;
          }
          case LeafKind::Integer:
            out.set_int(i, int_op(x.int_at(i)));
            break;
          case LeafKind::Real:
            out.set_real(i, real_op(DualNumber(x.real_at(i))).primal());
            break;
          }
        }
        return out;
      },
      std::move(name), traits, std::move(dual));
}

Morphism power_proj(const Space& a, int k, int i) {
  if (i < 0 || i >= k)
    throw ShapeMismatch("projection index out of range");
  const auto n = a.leaf_count();
  const auto off = static_cast<std::size_t>(i) * n;
  return Morphism(power(a, k), a, [off, n](const Element& x) { return x.slice(off, n); },
                  "p" + std::to_string(i), kLinear, slice_dual(off, n));
}

} // namespace diffcat
