#include "diffcat/dual_number.hpp"

#include <cmath>

namespace diffcat {

DualNumber::DualNumber(double value, int order)
    : coeffs_(std::size_t{1} << order, 0.0), order_(order) {
  coeffs_[0] = value;
}

DualNumber DualNumber::lifted(int order) const {
  if (order <= order_)
    return *this;
  DualNumber out(0.0, order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = coeffs_[i];
  return out;
}

DualNumber DualNumber::with_tangent(const DualNumber& tangent) const {
  const int k = std::max(order_, tangent.order_);
  const DualNumber base = lifted(k);
  const DualNumber t = tangent.lifted(k);
  DualNumber out(0.0, k + 1);
  const std::size_t half = std::size_t{1} << k;
  for (std::size_t i = 0; i < half; ++i) {
    out.coeffs_[i] = base.coeffs_[i];
    out.coeffs_[half + i] = t.coeffs_[i];
  }
  return out;
}

DualNumber DualNumber::tangent_part() const {
  if (order_ == 0)
    return DualNumber(0.0);
  DualNumber out(0.0, order_ - 1);
  const std::size_t half = coeffs_.size() / 2;
  for (std::size_t i = 0; i < half; ++i)
    out.coeffs_[i] = coeffs_[half + i];
  return out;
}

DualNumber DualNumber::nilpotent_part() const {
  DualNumber out = *this;
  out.coeffs_[0] = 0.0;
  return out;
}

DualNumber& DualNumber::operator+=(const DualNumber& b) {
  if (b.order_ > order_)
    *this = lifted(b.order_);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    coeffs_[i] += b.coeffs_[i];
  return *this;
}

DualNumber& DualNumber::operator-=(const DualNumber& b) {
  if (b.order_ > order_)
    *this = lifted(b.order_);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    coeffs_[i] -= b.coeffs_[i];
  return *this;
}

DualNumber& DualNumber::operator*=(const DualNumber& b) {
  const int k = std::max(order_, b.order_);
  const DualNumber a = lifted(k);
  const DualNumber c = b.lifted(k);
  DualNumber out(0.0, k);
  const std::size_t n = out.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0.0)
      continue;
    // Monomials sharing an infinitesimal vanish.
    for (std::size_t j = 0; j < n; ++j)
      if ((i & j) == 0)
        out.coeffs_[i | j] += a.coeffs_[i] * c.coeffs_[j];
  }
  *this = std::move(out);
  return *this;
}

DualNumber operator-(DualNumber a) {
  for (auto& c : a.coeffs_)
    c = -c;
  return a;
}

namespace {

// f(a + n) = sum_j f^(j)(a) n^j / j!, exact because n^(order+1) = 0.
template <class Deriv>
DualNumber taylor(const DualNumber& x, Deriv derivative_at) {
  const DualNumber n = x.nilpotent_part();
  DualNumber out(derivative_at(0), x.order());
  DualNumber power = n;
  double factorial = 1.0;
  for (int j = 1; j <= x.order(); ++j) {
    factorial *= j;
    out += DualNumber(derivative_at(j) / factorial) * power;
    power *= n;
  }
  return out;
}

} // namespace

DualNumber sin(const DualNumber& x) {
  const double s = std::sin(x.primal());
  const double c = std::cos(x.primal());
  return taylor(x, [&](int j) {
    switch (j % 4) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
    }
  });
}

DualNumber cos(const DualNumber& x) {
  const double s = std::sin(x.primal());
  const double c = std::cos(x.primal());
  return taylor(x, [&](int j) {
    switch (j % 4) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
    }
  });
}

DualNumber exp(const DualNumber& x) {
  const double e = std::exp(x.primal());
  return taylor(x, [&](int) { return e; });
}

} // namespace diffcat
