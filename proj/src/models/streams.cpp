#include "diffcat/models/streams.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/rng.hpp"
#include "primitives.hpp"

namespace diffcat {

StreamsModel::StreamsModel(int k, bool simple_operator)
    : Model(ModelTag{ModelTag::Kind::Streams, 2, k}), simple_(simple_operator) {
  register_primitive("sq", leaf_square);
  register_primitive("inc", leaf_increment);
  register_primitive("dbl", [](const Space& a) { return leaf_times(a, 2, "dbl"); });
  register_primitive("sum", running_sum);
  register_primitive("delay", delay);
  register_primitive("mulprev", multiply_previous);
}

std::string StreamsModel::name() const {
  return simple_ ? "streams-simple:k=" + std::to_string(prefix_length()) : Model::name();
}

Morphism StreamsModel::epsilon_at(const Space& a) const { return truncation(a); }

Morphism StreamsModel::derivative(const Morphism& f) const {
  return (simple_ ? simple_stream_derivative(f) : stream_derivative(f)).with_model(tag());
}

void StreamsModel::check_space(const Space& a) const {
  if (!a.is_stream_shaped())
    throw ModelRestriction("streams model has no object " + a.to_string());
  for (const auto& leaf : a.leaves())
    if (leaf.kind == LeafKind::Real)
      throw ModelRestriction("stream bases must be integer or cyclic: " + a.to_string());
}

Space StreamsModel::default_space() const {
  return Space::stream(Space::integers(), prefix_length());
}

Morphism StreamsModel::admit(const Morphism& f) const {
  Morphism g = Model::admit(f);
  if (g.traits().causal)
    return g;
  const auto report = causality_check(g, EqualityStrategy::sampled(64, 0xca05a1));
  if (!report.pass)
    throw NotCausal(g.name() + " is not causal at " + report.counterexample->point);
  Traits t = g.traits();
  t.causal = true;
  return g.with_traits(t);
}

Morphism truncation(const Space& a) {
  return Morphism(a, a, [a](const Element& x) { return truncate_head(a, x); }, "z",
                  Traits{true, true});
}

namespace {

// Picks u at index-0 leaves and v elsewhere, then subtracts w leafwise.
Element splice_minus(const Space& cod, const Element& u, const Element& v, const Element& w) {
  const auto leaves = cod.leaves();
  Element picked = v;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i].time == 0)
      picked.set_raw(i, u.raw(i));
  return subtract(cod, picked, w);
}

} // namespace

Morphism stream_derivative(const Morphism& f) {
  const Space& a = f.dom();
  const auto n = a.leaf_count();
  return Morphism(
      Space::product(a, a), f.cod(),
      [a, n, cod = f.cod(), fe = f.evaluator()](const Element& ab) {
        const Element x = ab.slice(0, n);
        const Element y = ab.slice(n, n);
        const Element base = fe(x);
        return splice_minus(cod, fe(add(a, x, y)), fe(add(a, x, truncate_head(a, y))), base);
      },
      "d(" + f.name() + ")", f.traits());
}

Morphism simple_stream_derivative(const Morphism& f) {
  const Space& a = f.dom();
  const auto n = a.leaf_count();
  return Morphism(
      Space::product(a, a), f.cod(),
      [a, n, cod = f.cod(), fe = f.evaluator()](const Element& ab) {
        const Element x = ab.slice(0, n);
        const Element y = ab.slice(n, n);
        return subtract(cod, fe(add(a, x, truncate_head(a, y))), fe(x));
      },
      "dsimple(" + f.name() + ")", f.traits());
}

EqualityReport causality_check(const Morphism& f, const EqualityStrategy& strat) {
  const Space& a = f.dom();
  const Space& cod = f.cod();
  const int len = std::max(a.stream_length(), cod.stream_length());
  const auto in_leaves = a.leaves();
  const auto out_leaves = cod.leaves();
  EqualityReport report;
  report.mode = EqualityStrategy::Mode::Sampled;
  Rng rng(strat.seed);
  for (std::size_t s = 0; s < strat.count; ++s) {
    const Element x = random_element(a, rng);
    const Element other = random_element(a, rng);
    for (int p = 0; p <= len; ++p) {
      Element y = x;
      for (std::size_t i = 0; i < in_leaves.size(); ++i)
        if (in_leaves[i].time >= p)
          y.set_raw(i, other.raw(i));
      const Element fx = f(x);
      const Element fy = f(y);
      ++report.checked;
      bool agree = true;
      for (std::size_t i = 0; i < out_leaves.size(); ++i)
        if (out_leaves[i].time >= 0 && out_leaves[i].time < p && fx.raw(i) != fy.raw(i))
          agree = false;
      if (!agree) {
        ++report.violations;
        if (!report.counterexample) {
          report.counterexample =
              Counterexample{"prefix " + std::to_string(p) + " of " + format_element(a, x) +
                                 " and " + format_element(a, y),
                             format_element(cod, fx), format_element(cod, fy)};
          report.witness = x;
        }
      }
    }
  }
  report.pass = report.violations == 0;
  return report;
}

namespace {

void collect_previous(const Space& s, std::size_t offset, std::vector<int>& out) {
  switch (s.kind()) {
  case SpaceKind::Stream: {
    const auto b = s.base().leaf_count();
    for (int t = 0; t < s.length(); ++t)
      for (std::size_t j = 0; j < b; ++j) {
        const auto idx = offset + static_cast<std::size_t>(t) * b + j;
        out[idx] = t == 0 ? -1 : static_cast<int>(idx - b);
      }
    return;
  }
  case SpaceKind::Product:
    collect_previous(s.left(), offset, out);
    collect_previous(s.right(), offset + s.left().leaf_count(), out);
    return;
  default:
    return;
  }
}

} // namespace

std::vector<int> previous_leaf(const Space& a) {
  std::vector<int> out(a.leaf_count(), -1);
  collect_previous(a, 0, out);
  return out;
}

Morphism running_sum(const Space& a) {
  const auto prev = previous_leaf(a);
  const std::vector<LeafSpec> leaves(a.leaves().begin(), a.leaves().end());
  return Morphism(
      a, a,
      [prev, leaves](const Element& x) {
        Element out = x;
        // Leaves are laid out in index order, so prev[i] < i is already summed.
        for (std::size_t i = 0; i < leaves.size(); ++i)
          if (prev[i] >= 0)
            out.set_int(i, leaf_add(leaves[i], out.int_at(i),
                                    out.int_at(static_cast<std::size_t>(prev[i]))));
        return out;
      },
      "sum", Traits{true, true});
}

Morphism delay(const Space& a) {
  const auto prev = previous_leaf(a);
  return Morphism(
      a, a,
      [prev](const Element& x) {
        Element out(x.size());
        for (std::size_t i = 0; i < prev.size(); ++i)
          out.set_raw(i, prev[i] >= 0 ? x.raw(static_cast<std::size_t>(prev[i])) : 0);
        return out;
      },
      "delay", Traits{true, true});
}

Morphism multiply_previous(const Space& a) {
  const auto prev = previous_leaf(a);
  const std::vector<LeafSpec> leaves(a.leaves().begin(), a.leaves().end());
  return Morphism(
      a, a,
      [prev, leaves](const Element& x) {
        Element out = x;
        for (std::size_t i = 0; i < leaves.size(); ++i)
          if (prev[i] >= 0)
            out.set_int(i, leaf_mul(leaves[i], x.int_at(i),
                                    x.int_at(static_cast<std::size_t>(prev[i]))));
        return out;
      },
      "mulprev", Traits{false, true});
}

Morphism shift_left(const Space& a) {
  const auto prev = previous_leaf(a);
  return Morphism(
      a, a,
      [prev](const Element& x) {
        Element out(x.size());
        for (std::size_t i = 0; i < prev.size(); ++i)
          if (prev[i] >= 0)
            out.set_raw(static_cast<std::size_t>(prev[i]), x.raw(i));
        return out;
      },
      "shift_left");
}

} // namespace diffcat
