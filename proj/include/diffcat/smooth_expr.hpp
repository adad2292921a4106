#pragma once

#include "diffcat/morphism.hpp"

#include <memory>
#include <string>
#include <vector>

namespace diffcat {

class Rng;

/// Expression tree over the coordinates of R^d: constants, variables, sums,
/// products and sin, cos, exp. Evaluates over doubles and over dual numbers,
/// so maps built from it carry a dual evaluator.
class SmoothExpr {
public:
  enum class Op { Const, Var, Add, Mul, Sin, Cos, Exp };

  static SmoothExpr constant(double c);
  static SmoothExpr var(int index);
  static SmoothExpr sum(SmoothExpr a, SmoothExpr b);
  static SmoothExpr product(SmoothExpr a, SmoothExpr b);
  static SmoothExpr apply(Op unary, SmoothExpr a);

  Op op() const noexcept { return node_->op; }
  /// Highest variable index used, or -1.
  int max_var() const noexcept;
  /// Polynomial degree, counting sin, cos and exp nodes as degree 1.
  int degree() const noexcept;

  double eval(std::span<const double> x) const;
  DualNumber eval(std::span<const DualNumber> x) const;

  std::string to_string() const;

private:
  struct Node {
    Op op = Op::Const;
    double value = 0.0;
    int index = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit SmoothExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  template <class T>
  static T eval_node(const Node& n, std::span<const T> x);
  static std::string print(const Node& n);
  std::shared_ptr<const Node> node_;
};

/// R^d -> R^d with one expression per output coordinate.
Morphism smooth_map(int dim, std::vector<SmoothExpr> outputs);

/// Random expression in d variables: sums and products of affine forms and
/// of sin, cos, exp applied to affine forms, nesting depth at most `depth`
/// and degree at most `max_degree`. Coefficients lie on the grid k/4 in
/// [-1.5, 1.5].
SmoothExpr random_smooth_expr(int dim, int depth, int max_degree, Rng& rng);

} // namespace diffcat
