#pragma once

#include "diffcat/space.hpp"

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diffcat {

class Rng;

/// A value of some Space, stored as the flat leaf layout of that space.
///
/// Integer and cyclic leaves hold their value directly; real leaves hold the
/// bit pattern of a double. An Element does not know its Space: every
/// operation that needs the leaf kinds takes the Space explicitly.
class Element {
public:
  using Storage = boost::container::small_vector<std::int64_t, 8>;

  Element() = default;
  explicit Element(std::size_t leaves) : leaves_(leaves, 0) {}

  std::size_t size() const noexcept { return leaves_.size(); }

  std::int64_t int_at(std::size_t i) const { return leaves_[i]; }
  double real_at(std::size_t i) const { return std::bit_cast<double>(leaves_[i]); }
  void set_int(std::size_t i, std::int64_t v) { leaves_[i] = v; }
  void set_real(std::size_t i, double v) { leaves_[i] = std::bit_cast<std::int64_t>(v); }

  std::int64_t raw(std::size_t i) const { return leaves_[i]; }
  void set_raw(std::size_t i, std::int64_t v) { leaves_[i] = v; }

  /// Leaves [offset, offset + count).
  Element slice(std::size_t offset, std::size_t count) const;
  static Element concat(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.leaves_ == b.leaves_;
  }

private:
  Storage leaves_;
};

// Group structure, leafwise over the space layout.
Element zero_element(const Space& space);
Element add(const Space& space, const Element& a, const Element& b);
Element negate(const Space& space, const Element& a);
Element subtract(const Space& space, const Element& a, const Element& b);
Element scale(const Space& space, std::int64_t k, const Element& a);
/// Leafwise product; used by polynomial primitives.
Element multiply(const Space& space, const Element& a, const Element& b);
/// Adds the integer constant c to every leaf.
Element offset(const Space& space, std::int64_t c, const Element& a);

// Single-leaf arithmetic; cyclic results are reduced, integer results are
// overflow checked. Real leaves are not supported here.
std::int64_t leaf_add(const LeafSpec& leaf, std::int64_t a, std::int64_t b);
std::int64_t leaf_mul(const LeafSpec& leaf, std::int64_t a, std::int64_t b);

// Products.
Element pair_elements(const Element& a, const Element& b);
Element first(const Space& product, const Element& e);
Element second(const Space& product, const Element& e);

/// Zeroes every leaf at stream index 0 (the truncation operator on
/// stream-shaped spaces; other leaves are left alone).
Element truncate_head(const Space& space, const Element& e);

/// Exact on cyclic and integer leaves; |a-b| <= absTol + relTol*max(|a|,|b|)
/// on real leaves.
bool approx_equal(const Space& space, const Element& a, const Element& b,
                  double abs_tol, double rel_tol);

/// Canonical text: integers, reals, `(a, b)`, `[a, b, ...]`, `{...}`, `()`.
std::string format_element(const Space& space, const Element& e);
Element parse_element(const Space& space, std::string_view text);

// Enumeration in odometer order, the first leaf most significant.
std::uint64_t leaf_radix(const LeafSpec& leaf);
Element element_at(const Space& space, std::uint64_t index);
std::uint64_t index_of(const Space& space, const Element& e);
std::vector<Element> enumerate(const Space& space,
                               std::uint64_t bound = kDefaultEnumerationBound);

inline constexpr double kDefaultRealRange = 10.0;

Element random_element(const Space& space, Rng& rng,
                       double real_range = kDefaultRealRange);
std::vector<Element> sample(const Space& space, std::size_t count, std::uint64_t seed,
                            double real_range = kDefaultRealRange);

} // namespace diffcat
