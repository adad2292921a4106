#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffcat {

enum class SpaceKind { Cyclic, BoundedInt, Real, Stream, Product, Terminal, Function };

enum class LeafKind : std::uint8_t { Cyclic, Integer, Real };

/// One scalar slot of the flat element layout.
struct LeafSpec {
  LeafKind kind = LeafKind::Integer;
  std::int64_t modulus = 0; // Cyclic only
  std::int64_t lo = 0;      // Integer: enumeration and sampling range
  std::int64_t hi = 0;
  int time = -1;            // stream index of the leaf, -1 outside streams
};

/// Default bound on enumeration size used by exhaustive checks.
inline constexpr std::uint64_t kDefaultEnumerationBound = 100'000;

/// An object of a model: a finite-product descriptor with a flat leaf layout.
///
/// Spaces are immutable and cheap to copy. Every element of a space is stored
/// as a flat vector of leaves (see Element); products concatenate the layouts
/// of their factors, streams repeat the base layout once per index and
/// function spaces repeat the result layout once per argument.
class Space {
public:
  Space(); // terminal

  static Space cyclic(std::int64_t n);
  static Space bounded_int(std::int64_t lo, std::int64_t hi);
  static Space integers(); // Int[-100,100]
  static Space real(int dim);
  static Space stream(const Space& base, int length);
  static Space product(const Space& left, const Space& right);
  static Space terminal();
  static Space function(const Space& arg, const Space& res);

  SpaceKind kind() const noexcept;
  std::int64_t modulus() const;
  std::int64_t lo() const;
  std::int64_t hi() const;
  int dim() const;
  int length() const;
  const Space& base() const;
  const Space& left() const;
  const Space& right() const;
  const Space& arg() const;
  const Space& res() const;

  std::size_t leaf_count() const noexcept;
  std::span<const LeafSpec> leaves() const noexcept;

  /// Number of elements; nullopt for spaces with Real leaves. Saturates at
  /// UINT64_MAX.
  std::optional<std::uint64_t> cardinality() const noexcept;
  bool is_enumerable(std::uint64_t bound = kDefaultEnumerationBound) const noexcept;

  /// True when every leaf is cyclic, i.e. the space is a finite abelian group.
  bool is_finite_group() const noexcept;
  bool all_real() const noexcept;
  bool has_negation() const noexcept;
  /// True when every leaf belongs to a stream prefix.
  bool is_stream_shaped() const noexcept;
  /// Prefix length shared by all stream leaves, or 0 when there are none.
  int stream_length() const noexcept;

  const std::string& to_string() const noexcept;

  friend bool operator==(const Space& a, const Space& b) noexcept;

private:
  struct Node;
  explicit Space(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Parses `Z<n>`, `Z`, `Int[lo,hi]`, `R^d`, `Stream(s,K)`, `(s x s)`,
/// `(s => s)` and `1`.
Space parse_space(std::string_view text);

/// A ×-chain of k copies, right nested: a × (a × (...)).
Space power(const Space& a, int k);

} // namespace diffcat
