#include "diffcat/term.hpp"

#include "diffcat/errors.hpp"

#include <optional>

namespace diffcat {

namespace {

/// Union-find over type terms: variables, ground spaces and products.
class Typer {
public:
  explicit Typer(Space base) : base_(std::move(base)) {}

  struct NodeType {
    int dom;
    int cod;
  };

  int fresh() { return push({Tag::Var, {}, -1, -1}); }
  int ground(const Space& s) { return push({Tag::Ground, s, -1, -1}); }
  int prod(int l, int r) { return push({Tag::Prod, {}, l, r}); }

  /// Types every node in preorder; returns the root's type.
  NodeType infer(const Term& t, const std::string& path) {
    const std::size_t slot = types_.size();
    types_.push_back({-1, -1});
    NodeType out{};
    using K = Term::Kind;
    switch (t.kind()) {
    case K::Id: {
      const int a = fresh();
      out = {a, a};
      break;
    }
    case K::Pi0:
    case K::Pi1: {
      const int a = fresh(), b = fresh();
      out = {prod(a, b), t.kind() == K::Pi0 ? a : b};
      break;
    }
    case K::Zero:
      out = {fresh(), fresh()};
      break;
    case K::One:
      out = {fresh(), ground(Space::terminal())};
      break;
    case K::Comp: {
      const NodeType g = infer(t.child(0), path + ".0");
      const NodeType f = infer(t.child(1), path + ".1");
      unify(f.cod, g.dom, path, "codomain of the right factor", "domain of the left factor");
      out = {f.dom, g.cod};
      break;
    }
    case K::Pair: {
      const NodeType f = infer(t.child(0), path + ".0");
      const NodeType g = infer(t.child(1), path + ".1");
      unify(f.dom, g.dom, path, "domain of the first component", "domain of the second");
      out = {f.dom, prod(f.cod, g.cod)};
      break;
    }
    case K::Add: {
      const NodeType f = infer(t.child(0), path + ".0");
      const NodeType g = infer(t.child(1), path + ".1");
      unify(f.dom, g.dom, path, "domain of the first summand", "domain of the second");
      unify(f.cod, g.cod, path, "codomain of the first summand", "codomain of the second");
      out = f;
      break;
    }
    case K::Eps:
      out = infer(t.child(0), path + ".0");
      break;
    case K::D: {
      const NodeType f = infer(t.child(0), path + ".0");
      out = {prod(f.dom, f.dom), f.cod};
      break;
    }
    case K::Prim: {
      const int a = ground(base_);
      out = {a, a};
      break;
    }
    }
    types_[slot] = out;
    return out;
  }

  void unify_with(int x, const Space& s, const std::string& path, const char* what) {
    unify(x, ground(s), path, what, "requested space");
  }

  Space resolve(int x) {
    x = find(x);
    switch (nodes_[static_cast<std::size_t>(x)].tag) {
    case Tag::Var:
      // Open variables default to the base space.
      nodes_[static_cast<std::size_t>(x)] = {Tag::Ground, base_, -1, -1};
      return base_;
    case Tag::Ground:
      return nodes_[static_cast<std::size_t>(x)].ground;
    case Tag::Prod: {
      const int l = nodes_[static_cast<std::size_t>(x)].l;
      const int r = nodes_[static_cast<std::size_t>(x)].r;
      return Space::product(resolve(l), resolve(r));
    }
    }
    return base_;
  }

  const std::vector<NodeType>& node_types() const noexcept { return types_; }

private:
  enum class Tag { Var, Ground, Prod };
  struct Ty {
    Tag tag;
    Space ground;
    int l;
    int r;
  };

  int push(Ty t) {
    nodes_.push_back(std::move(t));
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  std::string show(int x) {
    x = find(x);
    const Ty& t = nodes_[static_cast<std::size_t>(x)];
    switch (t.tag) {
    case Tag::Var:
      return "?" + std::to_string(x);
    case Tag::Ground:
      return t.ground.to_string();
    case Tag::Prod:
      return "(" + show(t.l) + " x " + show(t.r) + ")";
    }
    return "?";
  }

  bool occurs(int var, int x) {
    x = find(x);
    if (x == var)
      return true;
    const Ty& t = nodes_[static_cast<std::size_t>(x)];
    return t.tag == Tag::Prod && (occurs(var, t.l) || occurs(var, t.r));
  }

  [[noreturn]] void fail(int a, int b, const std::string& path, const char* wa, const char* wb) {
    throw TypeError(std::string(wa) + " " + show(a) + " does not match " + wb + " " + show(b),
                    path);
  }

  void unify(int a, int b, const std::string& path, const char* wa, const char* wb) {
    const int x = find(a), y = find(b);
    if (x == y)
      return;
    const Ty tx = nodes_[static_cast<std::size_t>(x)];
    const Ty ty = nodes_[static_cast<std::size_t>(y)];
    if (tx.tag == Tag::Var) {
      if (occurs(x, y))
        fail(a, b, path, wa, wb);
      parent_[static_cast<std::size_t>(x)] = y;
      return;
    }
    if (ty.tag == Tag::Var) {
      if (occurs(y, x))
        fail(a, b, path, wa, wb);
      parent_[static_cast<std::size_t>(y)] = x;
      return;
    }
    if (tx.tag == Tag::Ground && ty.tag == Tag::Ground) {
      if (!(tx.ground == ty.ground))
        fail(a, b, path, wa, wb);
      parent_[static_cast<std::size_t>(x)] = y;
      return;
    }
    if (tx.tag == Tag::Prod && ty.tag == Tag::Prod) {
      parent_[static_cast<std::size_t>(x)] = y;
      unify(tx.l, ty.l, path, wa, wb);
      unify(tx.r, ty.r, path, wa, wb);
      return;
    }
    // One ground, one product.
    const Ty& g = tx.tag == Tag::Ground ? tx : ty;
    const Ty& p = tx.tag == Tag::Ground ? ty : tx;
    if (g.ground.kind() != SpaceKind::Product)
      fail(a, b, path, wa, wb);
    const int gx = tx.tag == Tag::Ground ? x : y;
    const int px = tx.tag == Tag::Ground ? y : x;
    unify(p.l, ground(g.ground.left()), path, wa, wb);
    unify(p.r, ground(g.ground.right()), path, wa, wb);
    parent_[static_cast<std::size_t>(px)] = gx;
  }

  Space base_;
  std::vector<Ty> nodes_;
  std::vector<int> parent_;
  std::vector<NodeType> types_;
};

struct Resolved {
  std::vector<TermType> types; // preorder
};

Resolved resolve_all(const Term& t, const Space& base, const std::optional<Space>& dom) {
  Typer typer(base);
  const auto root = typer.infer(t, "root");
  if (dom)
    typer.unify_with(root.dom, *dom, "root", "term domain");
  Resolved out;
  for (const auto& nt : typer.node_types())
    out.types.push_back({typer.resolve(nt.dom), typer.resolve(nt.cod)});
  return out;
}

class Interpreter {
public:
  Interpreter(const Model& model, const Space& base, const Resolved& r)
      : model_(model), base_(base), types_(r.types) {}

  Morphism run(const Term& t) {
    const TermType& ty = types_[next_++];
    using K = Term::Kind;
    switch (t.kind()) {
    case K::Id:
      return identity(ty.dom);
    case K::Pi0:
      return proj0(ty.dom.left(), ty.dom.right());
    case K::Pi1:
      return proj1(ty.dom.left(), ty.dom.right());
    case K::Zero:
      return zero_map(ty.dom, ty.cod);
    case K::One:
      return terminal_map(ty.dom);
    case K::Comp: {
      const Morphism g = run(t.child(0));
      const Morphism f = run(t.child(1));
      return compose(g, f);
    }
    case K::Pair: {
      const Morphism f = run(t.child(0));
      const Morphism g = run(t.child(1));
      return pair(f, g);
    }
    case K::Add: {
      const Morphism f = run(t.child(0));
      const Morphism g = run(t.child(1));
      return add(f, g);
    }
    case K::Eps:
      return model_.epsilon(run(t.child(0)));
    case K::D:
      return model_.derivative(run(t.child(0)));
    case K::Prim:
      return model_.primitive(t.name(), base_);
    }
    throw Error("unreachable term kind");
  }

private:
  const Model& model_;
  const Space& base_;
  const std::vector<TermType>& types_;
  std::size_t next_ = 0;
};

} // namespace

TermType typecheck(const Term& t, const Space& base) {
  return resolve_all(t, base, std::nullopt).types.front();
}

TermType typecheck(const Term& t, const Space& base, const Space& dom) {
  return resolve_all(t, base, dom).types.front();
}

Morphism interpret(const Term& t, const Model& model, const Space& base) {
  const Resolved r = resolve_all(t, base, std::nullopt);
  return Interpreter(model, base, r).run(t).renamed(print_term(t));
}

Morphism interpret(const Term& t, const Model& model, const Space& base, const Space& dom) {
  const Resolved r = resolve_all(t, base, dom);
  return Interpreter(model, base, r).run(t).renamed(print_term(t));
}

} // namespace diffcat
