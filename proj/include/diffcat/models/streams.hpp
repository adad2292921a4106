#pragma once

#include "diffcat/equality.hpp"
#include "diffcat/model.hpp"

namespace diffcat {

/// Causal functions on stream prefixes of length k. epsilon = z o (-) where
/// z zeroes index 0, and
///   d[f](a, b)_0     = f(a + b)_0 - f(a)_0
///   d[f](a, b)_{n+1} = f(a + z(b))_{n+1} - f(a)_{n+1}.
class StreamsModel : public Model {
public:
  /// `simple_operator` swaps in d[f](a, b) = f(a + z(b)) - f(a) at every
  /// index, an operator that fails the projection axiom.
  explicit StreamsModel(int k = 16, bool simple_operator = false);

  std::string name() const override;
  int prefix_length() const noexcept { return tag().k; }
  bool simple_operator() const noexcept { return simple_; }

  Morphism epsilon_at(const Space& a) const override;
  Morphism derivative(const Morphism& f) const override;
  void check_space(const Space& a) const override;
  Space default_space() const override;
  /// Rejects maps failing the causality check with NotCausal.
  Morphism admit(const Morphism& f) const override;

private:
  bool simple_;
};

/// The truncation operator on a stream-shaped space.
Morphism truncation(const Space& a);
Morphism stream_derivative(const Morphism& f);
Morphism simple_stream_derivative(const Morphism& f);

/// For every prefix length p, sampled inputs agreeing on indices < p yield
/// outputs agreeing on indices < p.
EqualityReport causality_check(const Morphism& f, const EqualityStrategy& strat);

/// Index of the same base leaf one step earlier, or -1 at index 0 and
/// outside streams.
std::vector<int> previous_leaf(const Space& a);

// Stream primitives beyond the leafwise polynomials.
Morphism running_sum(const Space& a);
Morphism delay(const Space& a);
/// out_0 = a_0, out_{n+1} = a_{n+1} * a_n.
Morphism multiply_previous(const Space& a);
/// out_i = a_{i+1}, last index 0. Not causal; a negative fixture.
Morphism shift_left(const Space& a);

} // namespace diffcat
