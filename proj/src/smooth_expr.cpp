#include "diffcat/smooth_expr.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace diffcat {

SmoothExpr SmoothExpr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = c;
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::var(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->index = index;
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::sum(SmoothExpr a, SmoothExpr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Add;
  n->lhs = std::move(a.node_);
  n->rhs = std::move(b.node_);
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::product(SmoothExpr a, SmoothExpr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Mul;
  n->lhs = std::move(a.node_);
  n->rhs = std::move(b.node_);
  return SmoothExpr(std::move(n));
}

SmoothExpr SmoothExpr::apply(Op unary, SmoothExpr a) {
  if (unary != Op::Sin && unary != Op::Cos && unary != Op::Exp)
    throw UnsupportedPrimitive("not a unary smooth primitive");
  auto n = std::make_shared<Node>();
  n->op = unary;
  n->lhs = std::move(a.node_);
  return SmoothExpr(std::move(n));
}

int SmoothExpr::max_var() const noexcept {
  const auto go = [](const auto& self, const Node& n) -> int {
    switch (n.op) {
    case Op::Const:
      return -1;
    case Op::Var:
      return n.index;
    case Op::Add:
    case Op::Mul:
      return std::max(self(self, *n.lhs), self(self, *n.rhs));
    default:
      return self(self, *n.lhs);
    }
  };
  return go(go, *node_);
}

int SmoothExpr::degree() const noexcept {
  const auto go = [](const auto& self, const Node& n) -> int {
    switch (n.op) {
    case Op::Const:
      return 0;
    case Op::Var:
      return 1;
    case Op::Add:
      return std::max(self(self, *n.lhs), self(self, *n.rhs));
    case Op::Mul:
      return self(self, *n.lhs) + self(self, *n.rhs);
    default:
      return 1;
    }
  };
  return go(go, *node_);
}

template <class T>
T SmoothExpr::eval_node(const Node& n, std::span<const T> x) {
  using std::cos;
  using std::exp;
  using std::sin;
  switch (n.op) {
  case Op::Const:
    return T(n.value);
  case Op::Var:
    return x[static_cast<std::size_t>(n.index)];
  case Op::Add:
    return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
  case Op::Mul:
    return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
  case Op::Sin:
    return sin(eval_node(*n.lhs, x));
  case Op::Cos:
    return cos(eval_node(*n.lhs, x));
  case Op::Exp:
    return exp(eval_node(*n.lhs, x));
  }
  return T(0.0);
}

double SmoothExpr::eval(std::span<const double> x) const { return eval_node(*node_, x); }

DualNumber SmoothExpr::eval(std::span<const DualNumber> x) const {
  return eval_node(*node_, x);
}

std::string SmoothExpr::print(const Node& n) {
  switch (n.op) {
  case Op::Const: {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", n.value);
    return buf;
  }
  case Op::Var:
    return "x" + std::to_string(n.index);
  case Op::Add:
    return "(" + print(*n.lhs) + " + " + print(*n.rhs) + ")";
  case Op::Mul:
    return print(*n.lhs) + "*" + print(*n.rhs);
  case Op::Sin:
    return "sin(" + print(*n.lhs) + ")";
  case Op::Cos:
    return "cos(" + print(*n.lhs) + ")";
  case Op::Exp:
    return "exp(" + print(*n.lhs) + ")";
  }
  return "?";
}

std::string SmoothExpr::to_string() const { return print(*node_); }

Morphism smooth_map(int dim, std::vector<SmoothExpr> outputs) {
  if (dim < 1 || outputs.size() != static_cast<std::size_t>(dim))
    throw ShapeMismatch("smooth_map needs one expression per coordinate");
  for (const auto& e : outputs)
    if (e.max_var() >= dim)
      throw ShapeMismatch("expression " + e.to_string() + " reads past R^" +
                          std::to_string(dim));
  const Space a = Space::real(dim);
  std::string name = outputs.size() == 1 ? outputs.front().to_string() : "";
  if (outputs.size() > 1) {
    name = "<";
    for (std::size_t i = 0; i < outputs.size(); ++i)
      name += (i ? ", " : "") + outputs[i].to_string();
    name += ">";
  }
  auto shared = std::make_shared<const std::vector<SmoothExpr>>(std::move(outputs));
  DualFn dual = [shared](std::span<const DualNumber> x) {
    DualVec out;
    for (const auto& e : *shared)
      out.push_back(e.eval(x));
    return out;
  };
  return Morphism(
      a, a,
      [shared](const Element& x) {
        std::vector<double> in(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          in[i] = x.real_at(i);
        Element out(shared->size());
        for (std::size_t i = 0; i < shared->size(); ++i)
          out.set_real(i, (*shared)[i].eval(std::span<const double>(in)));
        return out;
      },
      std::move(name), Traits{false, false}, std::move(dual));
}

namespace {

double grid_coefficient(Rng& rng) {
  std::int64_t k = 0;
  while (k == 0)
    k = rng.uniform_int(-6, 6);
  return static_cast<double>(k) / 4.0;
}

SmoothExpr affine(int dim, Rng& rng) {
  SmoothExpr lin = SmoothExpr::product(SmoothExpr::constant(grid_coefficient(rng)),
                                       SmoothExpr::var(static_cast<int>(rng.uniform_int(0, dim - 1))));
  if (rng.coin())
    return lin;
  return SmoothExpr::sum(lin, SmoothExpr::constant(grid_coefficient(rng)));
}

SmoothExpr gen(int dim, int depth, int budget, Rng& rng) {
  // budget >= 1 is the degree still available to this subtree.
  const auto choice = depth <= 1 ? rng.uniform_int(0, 3) : rng.uniform_int(0, 5);
  switch (choice) {
  case 0:
    return affine(dim, rng);
  case 1:
    return SmoothExpr::apply(SmoothExpr::Op::Sin, affine(dim, rng));
  case 2:
    return SmoothExpr::apply(SmoothExpr::Op::Cos, affine(dim, rng));
  case 3:
    return SmoothExpr::apply(SmoothExpr::Op::Exp,
                             SmoothExpr::product(SmoothExpr::constant(0.25), affine(dim, rng)));
  case 4:
    return SmoothExpr::sum(gen(dim, depth - 1, budget, rng), gen(dim, depth - 1, budget, rng));
  default: {
    if (budget < 2)
      return gen(dim, depth - 1, budget, rng);
    const int left = static_cast<int>(rng.uniform_int(1, budget - 1));
    SmoothExpr l = gen(dim, depth - 1, left, rng);
    SmoothExpr r = gen(dim, depth - 1, budget - l.degree(), rng);
    return SmoothExpr::product(std::move(l), std::move(r));
  }
  }
}

} // namespace

SmoothExpr random_smooth_expr(int dim, int depth, int max_degree, Rng& rng) {
  return gen(dim, std::max(depth, 1), std::max(max_degree, 1), rng);
}

} // namespace diffcat
