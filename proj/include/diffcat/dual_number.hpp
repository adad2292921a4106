#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>

namespace diffcat {

/// A truncated hyper-dual number over `order` independent infinitesimals
/// e_0 .. e_{order-1}, each squaring to zero.
///
/// Coefficient i multiplies the monomial prod_{b in bits(i)} e_b, so there are
/// 2^order coefficients and coefficient 0 is the primal value. Nesting the
/// directional derivative adds one infinitesimal per level, which keeps the
/// derivative closed under iteration.
class DualNumber {
public:
  using Coeffs = boost::container::small_vector<double, 4>;

  DualNumber() : coeffs_(1, 0.0) {}
  DualNumber(double value) : coeffs_(1, value) {} // NOLINT: implicit constant
  DualNumber(double value, int order);

  int order() const noexcept { return order_; }
  double primal() const noexcept { return coeffs_[0]; }
  double coeff(std::size_t monomial) const { return coeffs_[monomial]; }
  void set_coeff(std::size_t monomial, double v) { coeffs_[monomial] = v; }

  /// The same number viewed over `order` infinitesimals (order must not shrink).
  DualNumber lifted(int order) const;

  /// this + e_k * tangent, where both operands have order k; the result has
  /// order k + 1.
  DualNumber with_tangent(const DualNumber& tangent) const;

  /// The coefficient of the newest infinitesimal e_{k-1}, as a number of order
  /// k - 1.
  DualNumber tangent_part() const;

  /// Copy with the primal coefficient set to zero.
  DualNumber nilpotent_part() const;

  DualNumber& operator+=(const DualNumber& b);
  DualNumber& operator-=(const DualNumber& b);
  DualNumber& operator*=(const DualNumber& b);

  friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
  friend DualNumber operator-(DualNumber a);

private:
  Coeffs coeffs_;
  int order_ = 0;
};

DualNumber sin(const DualNumber& x);
DualNumber cos(const DualNumber& x);
DualNumber exp(const DualNumber& x);

} // namespace diffcat
