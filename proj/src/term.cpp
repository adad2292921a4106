#include "diffcat/term.hpp"

#include "diffcat/errors.hpp"

#include <algorithm>
#include <cctype>

namespace diffcat {

Term Term::make(Kind kind, std::vector<Term> kids, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::id() { return make(Kind::Id, {}); }
Term Term::pi0() { return make(Kind::Pi0, {}); }
Term Term::pi1() { return make(Kind::Pi1, {}); }
Term Term::zero() { return make(Kind::Zero, {}); }
Term Term::one() { return make(Kind::One, {}); }
Term Term::comp(Term g, Term f) { return make(Kind::Comp, {std::move(g), std::move(f)}); }
Term Term::pair(Term f, Term g) { return make(Kind::Pair, {std::move(f), std::move(g)}); }
Term Term::add(Term f, Term g) { return make(Kind::Add, {std::move(f), std::move(g)}); }
Term Term::eps(Term f) { return make(Kind::Eps, {std::move(f)}); }
Term Term::d(Term f) { return make(Kind::D, {std::move(f)}); }
Term Term::prim(std::string name) { return make(Kind::Prim, {}, std::move(name)); }

std::size_t Term::arity() const noexcept { return node_->kids.size(); }

const Term& Term::child(std::size_t i) const {
  if (i >= node_->kids.size())
    throw ShapeMismatch("term has no child " + std::to_string(i));
  return node_->kids[i];
}

int Term::depth() const noexcept {
  int d = 0;
  for (const auto& k : node_->kids)
    d = std::max(d, k.depth() + 1);
  return d;
}

bool Term::derivatives_at_leaves() const noexcept {
  if (kind() == Kind::D) {
    const Term* t = &node_->kids[0];
    while (t->kind() == Kind::D)
      t = &t->node_->kids[0];
    return t->kind() == Kind::Prim;
  }
  return std::all_of(node_->kids.begin(), node_->kids.end(),
                     [](const Term& k) { return k.derivatives_at_leaves(); });
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_)
    return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.node_->kids == b.node_->kids;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_one();
    skip_space();
    if (pos_ != text_.size())
      throw SyntaxError("trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
    return t;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::pair<std::string, std::size_t> word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')')
        break;
      ++pos_;
    }
    if (start == pos_)
      throw SyntaxError(pos_ < text_.size() ? "expected a name" : "unexpected end of input", pos_);
    return {std::string(text_.substr(start, pos_ - start)), start};
  }

  void expect_close() {
    skip_space();
    if (pos_ >= text_.size())
      throw SyntaxError("expected ')' before end of input", pos_);
    if (text_[pos_] != ')')
      throw SyntaxError("expected ')'", pos_);
    ++pos_;
  }

  Term parse_one() {
    skip_space();
    if (pos_ >= text_.size())
      throw SyntaxError("unexpected end of input", pos_);
    if (text_[pos_] == ')')
      throw SyntaxError("unexpected ')'", pos_);
    if (text_[pos_] != '(') {
      const auto [w, at] = word();
      if (w == "id")
        return Term::id();
      if (w == "pi0")
        return Term::pi0();
      if (w == "pi1")
        return Term::pi1();
      if (w == "zero")
        return Term::zero();
      if (w == "one")
        return Term::one();
      throw SyntaxError("unknown atom '" + w + "'", at);
    }
    ++pos_;
    const auto [head, at] = word();
    Term out = Term::id();
    if (head == "comp" || head == "pair" || head == "add") {
      Term a = parse_one();
      Term b = parse_one();
      out = head == "comp"   ? Term::comp(std::move(a), std::move(b))
            : head == "pair" ? Term::pair(std::move(a), std::move(b))
                             : Term::add(std::move(a), std::move(b));
    } else if (head == "eps" || head == "d") {
      Term a = parse_one();
      out = head == "eps" ? Term::eps(std::move(a)) : Term::d(std::move(a));
    } else if (head == "prim") {
      out = Term::prim(word().first);
    } else {
      throw SyntaxError("unknown form '" + head + "'", at);
    }
    expect_close();
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_all(); }

std::string print_term(const Term& t) {
  switch (t.kind()) {
  case Term::Kind::Id:
    return "id";
  case Term::Kind::Pi0:
    return "pi0";
  case Term::Kind::Pi1:
    return "pi1";
  case Term::Kind::Zero:
    return "zero";
  case Term::Kind::One:
    return "one";
  case Term::Kind::Comp:
    return "(comp " + print_term(t.child(0)) + " " + print_term(t.child(1)) + ")";
  case Term::Kind::Pair:
    return "(pair " + print_term(t.child(0)) + " " + print_term(t.child(1)) + ")";
  case Term::Kind::Add:
    return "(add " + print_term(t.child(0)) + " " + print_term(t.child(1)) + ")";
  case Term::Kind::Eps:
    return "(eps " + print_term(t.child(0)) + ")";
  case Term::Kind::D:
    return "(d " + print_term(t.child(0)) + ")";
  case Term::Kind::Prim:
    return "(prim " + t.name() + ")";
  }
  return "?";
}

} // namespace diffcat
