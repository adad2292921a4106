#pragma once

#include "diffcat/model.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace diffcat {

class Rng;

/// First-order combinator syntax:
///   term := id | pi0 | pi1 | zero | one | (comp term term) | (pair term term)
///         | (add term term) | (eps term) | (d term) | (prim NAME)
/// Terms are immutable and share subterms.
class Term {
public:
  enum class Kind { Id, Pi0, Pi1, Zero, One, Comp, Pair, Add, Eps, D, Prim };

  static Term id();
  static Term pi0();
  static Term pi1();
  static Term zero();
  static Term one();
  static Term comp(Term g, Term f);
  static Term pair(Term f, Term g);
  static Term add(Term f, Term g);
  static Term eps(Term f);
  static Term d(Term f);
  static Term prim(std::string name);

  Kind kind() const noexcept { return node_->kind; }
  /// Primitive name; empty for other kinds.
  const std::string& name() const noexcept { return node_->name; }
  std::size_t arity() const noexcept;
  /// Child i (0 or 1) of a compound term.
  const Term& child(std::size_t i) const;

  /// Number of nested constructor levels; leaves have depth 0.
  int depth() const noexcept;
  /// True when every D node sits directly over a Prim or over another such
  /// D node.
  bool derivatives_at_leaves() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

private:
  struct Node {
    Kind kind = Kind::Id;
    std::string name;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::vector<Term> kids, std::string name = {});
  std::shared_ptr<const Node> node_;
};

/// SyntaxError with a byte position on malformed input.
Term parse_term(std::string_view text);
std::string print_term(const Term& t);

struct TermType {
  Space dom;
  Space cod;
};

/// Infers (dom, cod) by unification. Primitives are endomorphisms of the
/// base space; type variables left open default to the base space. Raises
/// TypeError naming the node path (child indices from the root, e.g.
/// `root.1.0`).
TermType typecheck(const Term& t, const Space& base);
/// Same, with the domain fixed in advance.
TermType typecheck(const Term& t, const Space& base, const Space& dom);

/// Compositional interpretation; D nodes call the model's derivative.
Morphism interpret(const Term& t, const Model& model, const Space& base);
Morphism interpret(const Term& t, const Model& model, const Space& base, const Space& dom);

/// Pushes D inward by the chain, pairing, projection, sum and extension
/// rules until D only sits over primitives.
Term symbolic_derive(const Term& t);
/// symbolic_derive applied `order` times.
Term symbolic_derive(const Term& t, int order);

/// Random well-typed term of depth at most `depth` with type dom -> cod,
/// where dom and cod are each either the base space A or A x A.
/// `primitives` are the names usable at A.
Term random_term(bool dom_pair, bool cod_pair, int depth,
                 const std::vector<std::string>& primitives, Rng& rng);

} // namespace diffcat
