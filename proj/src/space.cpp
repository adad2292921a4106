#include "diffcat/space.hpp"

#include "diffcat/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace diffcat {

struct Space::Node {
  SpaceKind kind = SpaceKind::Terminal;
  std::int64_t a = 0; // modulus | lo | dim | length
  std::int64_t b = 0; // hi
  std::optional<Space> left;
  std::optional<Space> right;
  std::vector<LeafSpec> leaves;
  std::optional<std::uint64_t> cardinality = 1;
  std::string text;
};

namespace {

std::optional<std::uint64_t> mul_sat(std::optional<std::uint64_t> x,
                                     std::optional<std::uint64_t> y) {
  if (!x || !y)
    return std::nullopt;
  if (*x == 0 || *y == 0)
    return 0;
  if (*x > std::numeric_limits<std::uint64_t>::max() / *y)
    return std::numeric_limits<std::uint64_t>::max();
  return *x * *y;
}

std::optional<std::uint64_t> pow_sat(std::optional<std::uint64_t> base,
                                     std::optional<std::uint64_t> exp) {
  if (!base || !exp)
    return std::nullopt;
  std::optional<std::uint64_t> acc = 1;
  for (std::uint64_t i = 0; i < *exp; ++i) {
    acc = mul_sat(acc, base);
    if (*acc == std::numeric_limits<std::uint64_t>::max())
      break;
  }
  return acc;
}

} // namespace

Space::Space() {
  static const std::shared_ptr<const Node> terminal = [] {
    auto n = std::make_shared<Node>();
    n->kind = SpaceKind::Terminal;
    n->text = "1";
    return n;
  }();
  node_ = terminal;
}

Space::Space(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Space Space::cyclic(std::int64_t n) {
  if (n <= 0)
    throw ParseError("cyclic group order must be positive");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Cyclic;
  node->a = n;
  node->leaves.push_back({LeafKind::Cyclic, n, 0, n - 1, -1});
  node->cardinality = static_cast<std::uint64_t>(n);
  node->text = "Z" + std::to_string(n);
  return Space(std::move(node));
}

Space Space::bounded_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw ParseError("empty integer range");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::BoundedInt;
  node->a = lo;
  node->b = hi;
  node->leaves.push_back({LeafKind::Integer, 0, lo, hi, -1});
  node->cardinality = static_cast<std::uint64_t>(hi - lo) + 1;
  node->text = "Int[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  return Space(std::move(node));
}

Space Space::integers() { return bounded_int(-100, 100); }

Space Space::real(int dim) {
  if (dim <= 0)
    throw ParseError("real dimension must be positive");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Real;
  node->a = dim;
  for (int i = 0; i < dim; ++i)
    node->leaves.push_back({LeafKind::Real, 0, 0, 0, -1});
  node->cardinality = std::nullopt;
  node->text = "R^" + std::to_string(dim);
  return Space(std::move(node));
}

Space Space::stream(const Space& base, int length) {
  if (length <= 0)
    throw ParseError("stream prefix length must be positive");
  if (base.stream_length() != 0)
    throw ParseError("stream bases must not contain streams");
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Stream;
  node->a = length;
  node->left = base;
  for (int t = 0; t < length; ++t)
    for (LeafSpec leaf : base.leaves()) {
      leaf.time = t;
      node->leaves.push_back(leaf);
    }
  node->cardinality =
      pow_sat(base.cardinality(), static_cast<std::uint64_t>(length));
  node->text = "Stream(" + base.to_string() + "," + std::to_string(length) + ")";
  return Space(std::move(node));
}

Space Space::product(const Space& left, const Space& right) {
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Product;
  node->left = left;
  node->right = right;
  node->leaves.assign(left.leaves().begin(), left.leaves().end());
  node->leaves.insert(node->leaves.end(), right.leaves().begin(),
                      right.leaves().end());
  node->cardinality = mul_sat(left.cardinality(), right.cardinality());
  node->text = "(" + left.to_string() + " x " + right.to_string() + ")";
  return Space(std::move(node));
}

Space Space::terminal() { return Space(); }

Space Space::function(const Space& arg, const Space& res) {
  if (!arg.is_finite_group())
    throw NotFinite("function-space arguments must be finite groups, got " +
                    arg.to_string());
  const auto count = arg.cardinality();
  if (!count || *count > kDefaultEnumerationBound)
    throw NotFinite("function-space argument too large: " + arg.to_string());
  auto node = std::make_shared<Node>();
  node->kind = SpaceKind::Function;
  node->left = arg;
  node->right = res;
  for (std::uint64_t i = 0; i < *count; ++i)
    node->leaves.insert(node->leaves.end(), res.leaves().begin(),
                        res.leaves().end());
  node->cardinality = pow_sat(res.cardinality(), count);
  node->text = "(" + arg.to_string() + " => " + res.to_string() + ")";
  return Space(std::move(node));
}

SpaceKind Space::kind() const noexcept { return node_->kind; }

std::int64_t Space::modulus() const {
  if (kind() != SpaceKind::Cyclic)
    throw ShapeMismatch("not a cyclic space: " + to_string());
  return node_->a;
}

std::int64_t Space::lo() const {
  if (kind() != SpaceKind::BoundedInt)
    throw ShapeMismatch("not an integer space: " + to_string());
  return node_->a;
}

std::int64_t Space::hi() const {
  if (kind() != SpaceKind::BoundedInt)
    throw ShapeMismatch("not an integer space: " + to_string());
  return node_->b;
}

int Space::dim() const {
  if (kind() != SpaceKind::Real)
    throw ShapeMismatch("not a real space: " + to_string());
  return static_cast<int>(node_->a);
}

int Space::length() const {
  if (kind() != SpaceKind::Stream)
    throw ShapeMismatch("not a stream space: " + to_string());
  return static_cast<int>(node_->a);
}

const Space& Space::base() const {
  if (kind() != SpaceKind::Stream)
    throw ShapeMismatch("not a stream space: " + to_string());
  return *node_->left;
}

const Space& Space::left() const {
  if (kind() != SpaceKind::Product)
    throw ShapeMismatch("not a product space: " + to_string());
  return *node_->left;
}

const Space& Space::right() const {
  if (kind() != SpaceKind::Product)
    throw ShapeMismatch("not a product space: " + to_string());
  return *node_->right;
}

const Space& Space::arg() const {
  if (kind() != SpaceKind::Function)
    throw ShapeMismatch("not a function space: " + to_string());
  return *node_->left;
}

const Space& Space::res() const {
  if (kind() != SpaceKind::Function)
    throw ShapeMismatch("not a function space: " + to_string());
  return *node_->right;
}

std::size_t Space::leaf_count() const noexcept { return node_->leaves.size(); }

std::span<const LeafSpec> Space::leaves() const noexcept { return node_->leaves; }

std::optional<std::uint64_t> Space::cardinality() const noexcept {
  return node_->cardinality;
}

bool Space::is_enumerable(std::uint64_t bound) const noexcept {
  const auto c = cardinality();
  return c && *c <= bound;
}

bool Space::is_finite_group() const noexcept {
  for (const auto& leaf : leaves())
    if (leaf.kind != LeafKind::Cyclic)
      return false;
  return true;
}

bool Space::all_real() const noexcept {
  for (const auto& leaf : leaves())
    if (leaf.kind != LeafKind::Real)
      return false;
  return true;
}

bool Space::has_negation() const noexcept { return true; }

bool Space::is_stream_shaped() const noexcept {
  for (const auto& leaf : leaves())
    if (leaf.time < 0)
      return false;
  return true;
}

int Space::stream_length() const noexcept {
  int len = 0;
  for (const auto& leaf : leaves())
    if (leaf.time + 1 > len)
      len = leaf.time + 1;
  return len;
}

const std::string& Space::to_string() const noexcept { return node_->text; }

bool operator==(const Space& a, const Space& b) noexcept {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

Space power(const Space& a, int k) {
  if (k <= 0)
    return Space::terminal();
  Space acc = a;
  for (int i = 1; i < k; ++i)
    acc = Space::product(a, acc);
  return acc;
}

namespace {

class SpaceParser {
public:
  explicit SpaceParser(std::string_view text) : text_(text) {}

  Space parse() {
    Space s = parse_space_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("trailing characters");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("bad space '" + std::string(text_) + "': " + msg +
                     " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token))
      fail("expected '" + std::string(token) + "'");
  }

  std::int64_t parse_int() {
    skip_ws();
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc())
      fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Space parse_space_expr() {
    skip_ws();
    if (consume("(")) {
      Space first = parse_space_expr();
      if (consume("=>")) {
        Space res = parse_space_expr();
        expect(")");
        return Space::function(first, res);
      }
      std::vector<Space> parts{first};
      while (consume("x"))
        parts.push_back(parse_space_expr());
      expect(")");
      if (parts.size() == 1)
        return first;
      Space acc = parts.back();
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        acc = Space::product(*it, acc);
      return acc;
    }
    if (consume("Stream")) {
      expect("(");
      Space base = parse_space_expr();
      expect(",");
      const auto k = parse_int();
      expect(")");
      return Space::stream(base, static_cast<int>(k));
    }
    if (consume("Int")) {
      expect("[");
      const auto lo = parse_int();
      expect(",");
      const auto hi = parse_int();
      expect("]");
      return Space::bounded_int(lo, hi);
    }
    if (consume("R^"))
      return Space::real(static_cast<int>(parse_int()));
    if (consume("R"))
      return Space::real(1);
    if (consume("Z")) {
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return Space::cyclic(parse_int());
      return Space::integers();
    }
    if (consume("1"))
      return Space::terminal();
    fail("unknown space");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Space parse_space(std::string_view text) { return SpaceParser(text).parse(); }

} // namespace diffcat
