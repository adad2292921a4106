#include "diffcat/subjects.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/models/streams.hpp"
#include "diffcat/rng.hpp"
#include "diffcat/smooth_expr.hpp"

#include <numeric>

namespace diffcat {

Morphism random_table(const Space& dom, const Space& cod, Rng& rng, const std::string& name) {
  const auto n = dom.cardinality();
  const auto m = cod.cardinality();
  if (!n || !m || *n > kDefaultEnumerationBound || *m == 0)
    throw NotEnumerable("random tables need finite spaces, got " + dom.to_string() + " -> " +
                        cod.to_string());
  std::vector<Element> table;
  table.reserve(*n);
  for (std::uint64_t i = 0; i < *n; ++i)
    table.push_back(
        element_at(cod, static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(*m) - 1))));
  return from_table(dom, cod, std::move(table), name);
}

Morphism random_polynomial(const Space& a, int max_degree, Rng& rng, const std::string& name) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(max_degree) + 1);
  for (auto& c : coeffs)
    c = rng.uniform_int(-3, 3);
  std::string text;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    if (coeffs[d] == 0)
      continue;
    if (!text.empty())
      text += " + ";
    text += std::to_string(coeffs[d]);
    if (d > 0)
      text += d == 1 ? "x" : "x^" + std::to_string(d);
  }
  if (text.empty())
    text = "0";
  const LeafSpec wide{LeafKind::Integer};
  return leafwise_map(
      a, name + "[" + text + "]",
      [coeffs, wide](std::int64_t x) {
        // Horner form, overflow checked.
        std::int64_t acc = 0;
        for (std::size_t d = coeffs.size(); d-- > 0;)
          acc = leaf_add(wide, leaf_mul(wide, acc, x), coeffs[d]);
        return acc;
      },
      [coeffs](const DualNumber& x) {
        DualNumber acc(0.0);
        for (std::size_t d = coeffs.size(); d-- > 0;)
          acc = acc * x + DualNumber(static_cast<double>(coeffs[d]));
        return acc;
      },
      Traits{false, true});
}

namespace {

/// Coefficients c with x -> c x well defined from leaf `in` to leaf `out`.
std::vector<std::int64_t> admissible_coefficients(const LeafSpec& out, const LeafSpec& in) {
  std::vector<std::int64_t> cs;
  for (std::int64_t c = -3; c <= 3; ++c) {
    bool ok = true;
    if (in.kind == LeafKind::Cyclic && out.kind == LeafKind::Integer)
      ok = c == 0;
    else if (in.kind == LeafKind::Cyclic && out.kind == LeafKind::Cyclic)
      ok = (c * in.modulus) % out.modulus == 0;
    if (ok)
      cs.push_back(c);
  }
  return cs;
}

} // namespace

Morphism random_homomorphism(const Space& a, Rng& rng, const std::string& name) {
  const std::vector<LeafSpec> leaves(a.leaves().begin(), a.leaves().end());
  const std::size_t n = leaves.size();
  std::vector<std::int64_t> c(n * n);
  std::string text = "[";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto cs = admissible_coefficients(leaves[i], leaves[j]);
      c[i * n + j] = cs[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(cs.size()) - 1))];
      text += (j ? " " : (i ? "; " : "")) + std::to_string(c[i * n + j]);
    }
  }
  text += "]";
  return Morphism(
      a, a,
      [leaves, c, n](const Element& x) {
        Element out(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (leaves[i].kind == LeafKind::Real) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
              acc += static_cast<double>(c[i * n + j]) * x.real_at(j);
            out.set_real(i, acc);
            continue;
          }
          std::int64_t acc = 0;
          for (std::size_t j = 0; j < n; ++j)
            acc = leaf_add(leaves[i], acc, leaf_mul(leaves[i], c[i * n + j], x.int_at(j)));
          out.set_int(i, acc);
        }
        return out;
      },
      name + text, Traits{true, false});
}

namespace {

struct StreamGen {
  const Space& a;
  Rng& rng;
  bool cyclic;

  Morphism window_table() {
    const auto prev = previous_leaf(a);
    const std::vector<LeafSpec> leaves(a.leaves().begin(), a.leaves().end());
    const std::int64_t m = leaves.front().modulus;
    std::vector<std::int64_t> table(static_cast<std::size_t>(m * m));
    std::string text;
    for (auto& t : table) {
      t = rng.uniform_int(0, m - 1);
      text += std::to_string(t);
    }
    return Morphism(
        a, a,
        [prev, table, m](const Element& x) {
          Element out(x.size());
          for (std::size_t i = 0; i < prev.size(); ++i) {
            const std::int64_t before = prev[i] >= 0 ? x.int_at(static_cast<std::size_t>(prev[i])) : 0;
            out.set_int(i, table[static_cast<std::size_t>(x.int_at(i) * m + before)]);
          }
          return out;
        },
        "window{" + text + "}", Traits{false, true});
  }

  std::pair<Morphism, int> atom(int budget) {
    for (;;) {
      switch (rng.uniform_int(0, 8)) {
      case 0:
        return {identity(a), 1};
      case 1:
        return {scale(2, identity(a)).renamed("dbl"), 1};
      case 2:
        return {negate(identity(a)).renamed("neg"), 1};
      case 3:
        return {running_sum(a), 1};
      case 4:
        return {delay(a), 1};
      case 5:
        return {random_polynomial(a, 1, rng, "poly"), 1};
      case 6:
        if (budget >= 2)
          return {random_polynomial(a, 2, rng, "poly"), 2};
        break;
      case 7:
        if (budget >= 2)
          return {multiply_previous(a), 2};
        break;
      default:
        if (cyclic)
          return {window_table(), 1};
        break;
      }
    }
  }

  std::pair<Morphism, int> node(int depth, int budget) {
    if (depth <= 1)
      return atom(budget);
    switch (rng.uniform_int(0, 2)) {
    case 0:
      return atom(budget);
    case 1: {
      auto [f, df] = node(depth - 1, budget);
      auto [g, dg] = node(depth - 1, budget);
      return {add(f, g), std::max(df, dg)};
    }
    default: {
      auto [f, df] = node(depth - 1, budget);
      auto [g, dg] = node(depth - 1, std::max(1, budget / df));
      return {compose(g, f), df * dg};
    }
    }
  }
};

} // namespace

Morphism random_stream_map(const Space& a, Rng& rng) {
  if (!a.is_stream_shaped())
    throw NotCausal("stream subjects need a stream-shaped space, got " + a.to_string());
  bool cyclic = a.is_finite_group();
  if (cyclic) {
    const auto m = a.leaves().front().modulus;
    for (const auto& l : a.leaves())
      cyclic = cyclic && l.modulus == m;
  }
  StreamGen g{a, rng, cyclic};
  return g.node(3, 4).first;
}

std::vector<Morphism> generate_subjects(const Model& model, const Space& space, std::size_t count,
                                        std::uint64_t seed) {
  model.check_space(space);
  std::vector<Morphism> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::string tag = std::to_string(i);
    Morphism f = [&]() -> Morphism {
      switch (model.tag().kind) {
      case ModelTag::Kind::FinDiff: {
        // Tables need a domain closed under the group operations.
        const auto card = space.cardinality();
        if (space.is_finite_group() && card && *card <= 4096)
          return random_table(space, space, rng, "table" + tag);
        // Quadratic keeps self-compositions of second derivatives inside int64.
        return random_polynomial(space, 2, rng, "poly" + tag);
      }
      case ModelTag::Kind::Smooth: {
        std::vector<SmoothExpr> outs;
        for (int d = 0; d < space.dim(); ++d)
          outs.push_back(random_smooth_expr(space.dim(), 3, 4, rng));
        return smooth_map(space.dim(), std::move(outs));
      }
      case ModelTag::Kind::ModuleMaps:
        return random_homomorphism(space, rng, "hom" + tag);
      case ModelTag::Kind::Streams:
        return random_stream_map(space, rng);
      }
      throw Error("unknown model kind");
    }();
    out.push_back(model.admit(f));
  }
  return out;
}

std::vector<Morphism> primitive_subjects(const Model& model, const Space& space) {
  std::vector<Morphism> out;
  for (const auto& name : model.primitive_names()) {
    try {
      out.push_back(model.primitive(name, space));
    } catch (const ModelRestriction&) {
      // not defined at this space
    }
  }
  return out;
}

} // namespace diffcat
