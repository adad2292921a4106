#include "diffcat/element.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/rng.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace diffcat {

Element Element::slice(std::size_t offset, std::size_t count) const {
  Element out(count);
  std::copy_n(leaves_.begin() + static_cast<std::ptrdiff_t>(offset), count,
              out.leaves_.begin());
  return out;
}

Element Element::concat(const Element& a, const Element& b) {
  Element out;
  out.leaves_.reserve(a.size() + b.size());
  out.leaves_.insert(out.leaves_.end(), a.leaves_.begin(), a.leaves_.end());
  out.leaves_.insert(out.leaves_.end(), b.leaves_.begin(), b.leaves_.end());
  return out;
}

namespace {

std::int64_t mod_normalize(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in multiplication");
  return out;
}

void check_size(const Space& space, const Element& e) {
  if (e.size() != space.leaf_count())
    throw TypeMismatch("element with " + std::to_string(e.size()) +
                       " leaves used at space " + space.to_string());
}

template <class IntOp, class RealOp>
Element leafwise(const Space& space, const Element& a, const Element& b,
                 IntOp int_op, RealOp real_op) {
  check_size(space, a);
  check_size(space, b);
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    switch (leaves[i].kind) {
    case LeafKind::Cyclic:
      out.set_int(i, mod_normalize(int_op(a.int_at(i), b.int_at(i), leaves[i].modulus),
                                   leaves[i].modulus));
      break;
    case LeafKind::Integer:
      out.set_int(i, int_op(a.int_at(i), b.int_at(i), 0));
      break;
    case LeafKind::Real:
      out.set_real(i, real_op(a.real_at(i), b.real_at(i)));
      break;
    }
  }
  return out;
}

} // namespace

Element zero_element(const Space& space) {
  // Both int 0 and +0.0 are the all-zero bit pattern.
  return Element(space.leaf_count());
}

Element add(const Space& space, const Element& a, const Element& b) {
  return leafwise(
      space, a, b,
      [](std::int64_t x, std::int64_t y, std::int64_t n) {
        return n != 0 ? x + y : checked_add(x, y);
      },
      [](double x, double y) { return x + y; });
}

Element negate(const Space& space, const Element& a) {
  check_size(space, a);
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    switch (leaves[i].kind) {
    case LeafKind::Cyclic:
      out.set_int(i, mod_normalize(-a.int_at(i), leaves[i].modulus));
      break;
    case LeafKind::Integer:
      out.set_int(i, checked_mul(a.int_at(i), -1));
      break;
    case LeafKind::Real:
      out.set_real(i, -a.real_at(i));
      break;
    }
  }
  return out;
}

Element subtract(const Space& space, const Element& a, const Element& b) {
  return leafwise(
      space, a, b,
      [](std::int64_t x, std::int64_t y, std::int64_t n) {
        if (n != 0)
          return x - y;
        std::int64_t out = 0;
        if (__builtin_sub_overflow(x, y, &out))
          throw ArithmeticOverflow("integer overflow in subtraction");
        return out;
      },
      [](double x, double y) { return x - y; });
}

Element scale(const Space& space, std::int64_t k, const Element& a) {
  check_size(space, a);
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    switch (leaves[i].kind) {
    case LeafKind::Cyclic: {
      const auto n = leaves[i].modulus;
      const auto prod = static_cast<__int128>(mod_normalize(k, n)) * a.int_at(i);
      out.set_int(i, static_cast<std::int64_t>(prod % n));
      break;
    }
    case LeafKind::Integer:
      out.set_int(i, checked_mul(k, a.int_at(i)));
      break;
    case LeafKind::Real:
      out.set_real(i, static_cast<double>(k) * a.real_at(i));
      break;
    }
  }
  return out;
}

Element multiply(const Space& space, const Element& a, const Element& b) {
  return leafwise(
      space, a, b,
      [](std::int64_t x, std::int64_t y, std::int64_t n) {
        if (n != 0)
          return static_cast<std::int64_t>(static_cast<__int128>(x) * y % n);
        return checked_mul(x, y);
      },
      [](double x, double y) { return x * y; });
}

Element offset(const Space& space, std::int64_t c, const Element& a) {
  check_size(space, a);
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    switch (leaves[i].kind) {
    case LeafKind::Cyclic:
      out.set_int(i, mod_normalize(a.int_at(i) + mod_normalize(c, leaves[i].modulus),
                                   leaves[i].modulus));
      break;
    case LeafKind::Integer:
      out.set_int(i, checked_add(a.int_at(i), c));
      break;
    case LeafKind::Real:
      out.set_real(i, a.real_at(i) + static_cast<double>(c));
      break;
    }
  }
  return out;
}

std::int64_t leaf_add(const LeafSpec& leaf, std::int64_t a, std::int64_t b) {
  if (leaf.kind == LeafKind::Cyclic)
    return mod_normalize(a + b, leaf.modulus);
  return checked_add(a, b);
}

std::int64_t leaf_mul(const LeafSpec& leaf, std::int64_t a, std::int64_t b) {
  if (leaf.kind == LeafKind::Cyclic)
    return mod_normalize(
        static_cast<std::int64_t>(static_cast<__int128>(a) * b % leaf.modulus), leaf.modulus);
  return checked_mul(a, b);
}

Element pair_elements(const Element& a, const Element& b) { return Element::concat(a, b); }

Element first(const Space& product, const Element& e) {
  return e.slice(0, product.left().leaf_count());
}

Element second(const Space& product, const Element& e) {
  const auto n = product.left().leaf_count();
  return e.slice(n, product.right().leaf_count());
}

Element truncate_head(const Space& space, const Element& e) {
  check_size(space, e);
  Element out = e;
  const auto leaves = space.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i].time == 0)
      out.set_raw(i, 0);
  return out;
}

bool approx_equal(const Space& space, const Element& a, const Element& b,
                  double abs_tol, double rel_tol) {
  check_size(space, a);
  check_size(space, b);
  const auto leaves = space.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].kind != LeafKind::Real) {
      if (a.int_at(i) != b.int_at(i))
        return false;
      continue;
    }
    const double x = a.real_at(i);
    const double y = b.real_at(i);
    if (x == y)
      continue;
    if (!std::isfinite(x) || !std::isfinite(y))
      return false;
    if (std::fabs(x - y) > abs_tol + rel_tol * std::max(std::fabs(x), std::fabs(y)))
      return false;
  }
  return true;
}

namespace {

void format_into(const Space& space, const Element& e, std::size_t& pos,
                 std::string& out) {
  switch (space.kind()) {
  case SpaceKind::Cyclic:
  case SpaceKind::BoundedInt:
    out += std::to_string(e.int_at(pos++));
    return;
  case SpaceKind::Real: {
    const int d = space.dim();
    if (d > 1)
      out += '(';
    for (int i = 0; i < d; ++i) {
      if (i > 0)
        out += ", ";
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.real_at(pos++));
      out.append(buf, ptr);
    }
    if (d > 1)
      out += ')';
    return;
  }
  case SpaceKind::Stream:
    out += '[';
    for (int t = 0; t < space.length(); ++t) {
      if (t > 0)
        out += ", ";
      format_into(space.base(), e, pos, out);
    }
    out += ']';
    return;
  case SpaceKind::Product:
    out += '(';
    format_into(space.left(), e, pos, out);
    out += ", ";
    format_into(space.right(), e, pos, out);
    out += ')';
    return;
  case SpaceKind::Terminal:
    out += "()";
    return;
  case SpaceKind::Function: {
    out += '{';
    const auto n = *space.arg().cardinality();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i > 0)
        out += ", ";
      format_into(space.res(), e, pos, out);
    }
    out += '}';
    return;
  }
  }
}

class ElementParser {
public:
  ElementParser(const Space& space, std::string_view text) : space_(space), text_(text) {}

  Element parse() {
    Element out(space_.leaf_count());
    std::size_t pos = 0;
    parse_into(space_, out, pos);
    skip_ws();
    if (at_ != text_.size())
      fail("trailing characters");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot read '" + std::string(text_) + "' as " + space_.to_string() +
                     ": " + msg + " at position " + std::to_string(at_));
  }

  void skip_ws() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_])))
      ++at_;
  }

  void expect(char c) {
    skip_ws();
    if (at_ >= text_.size() || text_[at_] != c)
      fail(std::string("expected '") + c + "'");
    ++at_;
  }

  bool peek(char c) {
    skip_ws();
    return at_ < text_.size() && text_[at_] == c;
  }

  std::int64_t read_int() {
    skip_ws();
    std::int64_t v = 0;
    const char* b = text_.data() + at_;
    auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc())
      fail("expected integer");
    at_ += static_cast<std::size_t>(ptr - b);
    return v;
  }

  double read_real() {
    skip_ws();
    double v = 0;
    const char* b = text_.data() + at_;
    auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc())
      fail("expected number");
    at_ += static_cast<std::size_t>(ptr - b);
    return v;
  }

  void parse_into(const Space& s, Element& out, std::size_t& pos) {
    switch (s.kind()) {
    case SpaceKind::Cyclic:
      out.set_int(pos++, mod_normalize(read_int(), s.modulus()));
      return;
    case SpaceKind::BoundedInt:
      out.set_int(pos++, read_int());
      return;
    case SpaceKind::Real: {
      const int d = s.dim();
      if (d == 1 && !peek('(')) {
        out.set_real(pos++, read_real());
        return;
      }
      expect('(');
      for (int i = 0; i < d; ++i) {
        if (i > 0)
          expect(',');
        out.set_real(pos++, read_real());
      }
      expect(')');
      return;
    }
    case SpaceKind::Stream:
      expect('[');
      for (int t = 0; t < s.length(); ++t) {
        if (t > 0)
          expect(',');
        parse_into(s.base(), out, pos);
      }
      expect(']');
      return;
    case SpaceKind::Product:
      expect('(');
      parse_into(s.left(), out, pos);
      expect(',');
      parse_into(s.right(), out, pos);
      expect(')');
      return;
    case SpaceKind::Terminal:
      expect('(');
      expect(')');
      return;
    case SpaceKind::Function: {
      expect('{');
      const auto n = *s.arg().cardinality();
      for (std::uint64_t i = 0; i < n; ++i) {
        if (i > 0)
          expect(',');
        parse_into(s.res(), out, pos);
      }
      expect('}');
      return;
    }
    }
  }

  const Space& space_;
  std::string_view text_;
  std::size_t at_ = 0;
};

} // namespace

std::string format_element(const Space& space, const Element& e) {
  check_size(space, e);
  std::string out;
  std::size_t pos = 0;
  format_into(space, e, pos, out);
  return out;
}

Element parse_element(const Space& space, std::string_view text) {
  return ElementParser(space, text).parse();
}

std::uint64_t leaf_radix(const LeafSpec& leaf) {
  switch (leaf.kind) {
  case LeafKind::Cyclic:
    return static_cast<std::uint64_t>(leaf.modulus);
  case LeafKind::Integer:
    return static_cast<std::uint64_t>(leaf.hi - leaf.lo) + 1;
  case LeafKind::Real:
    break;
  }
  throw NotEnumerable("real leaves are not enumerable");
}

Element element_at(const Space& space, std::uint64_t index) {
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = leaves.size(); i-- > 0;) {
    const auto radix = leaf_radix(leaves[i]);
    const auto digit = static_cast<std::int64_t>(index % radix);
    index /= radix;
    out.set_int(i, leaves[i].kind == LeafKind::Cyclic ? digit : leaves[i].lo + digit);
  }
  return out;
}

std::uint64_t index_of(const Space& space, const Element& e) {
  check_size(space, e);
  const auto leaves = space.leaves();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto radix = leaf_radix(leaves[i]);
    std::int64_t digit = e.int_at(i);
    if (leaves[i].kind == LeafKind::Integer)
      digit -= leaves[i].lo;
    if (digit < 0 || static_cast<std::uint64_t>(digit) >= radix)
      throw DomainMismatch("element " + format_element(space, e) +
                           " outside the enumerable range of " + space.to_string());
    index = index * radix + static_cast<std::uint64_t>(digit);
  }
  return index;
}

std::vector<Element> enumerate(const Space& space, std::uint64_t bound) {
  const auto card = space.cardinality();
  if (!card)
    throw NotEnumerable(space.to_string() + " is not enumerable");
  if (*card > bound)
    throw SizeExceeded(space.to_string() + " has " + std::to_string(*card) +
                       " elements, over the bound " + std::to_string(bound));
  std::vector<Element> out;
  out.reserve(*card);
  for (std::uint64_t i = 0; i < *card; ++i)
    out.push_back(element_at(space, i));
  return out;
}

Element random_element(const Space& space, Rng& rng, double real_range) {
  const auto leaves = space.leaves();
  Element out(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    switch (leaves[i].kind) {
    case LeafKind::Cyclic:
      out.set_int(i, rng.uniform_int(0, leaves[i].modulus - 1));
      break;
    case LeafKind::Integer:
      out.set_int(i, rng.uniform_int(leaves[i].lo, leaves[i].hi));
      break;
    case LeafKind::Real:
      out.set_real(i, rng.uniform_real(-real_range, real_range));
      break;
    }
  }
  return out;
}

std::vector<Element> sample(const Space& space, std::size_t count, std::uint64_t seed,
                            double real_range) {
  Rng rng(seed);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_element(space, rng, real_range));
  return out;
}

} // namespace diffcat
