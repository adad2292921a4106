#include "diffcat/term.hpp"

#include "diffcat/rng.hpp"

namespace diffcat {

namespace {

bool is_prim_chain(const Term& t) {
  const Term* p = &t;
  while (p->kind() == Term::Kind::D)
    p = &p->child(0);
  return p->kind() == Term::Kind::Prim;
}

Term derive(const Term& t);

/// Rewrites every D node that is not over a primitive chain, so that
/// undifferentiated copies of subterms made by the chain rule are clean.
Term normalize(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
  case K::Comp:
    return Term::comp(normalize(t.child(0)), normalize(t.child(1)));
  case K::Pair:
    return Term::pair(normalize(t.child(0)), normalize(t.child(1)));
  case K::Add:
    return Term::add(normalize(t.child(0)), normalize(t.child(1)));
  case K::Eps:
    return Term::eps(normalize(t.child(0)));
  case K::D:
    return is_prim_chain(t) ? t : derive(normalize(t.child(0)));
  default:
    return t;
  }
}

// Input is normalized; D nodes only sit over primitive chains.
Term derive(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
  case K::Id:
    return Term::pi1();
  case K::Pi0:
    return Term::comp(Term::pi0(), Term::pi1());
  case K::Pi1:
    return Term::comp(Term::pi1(), Term::pi1());
  case K::Zero:
    return Term::zero();
  case K::One:
    return Term::one();
  case K::Comp: {
    const Term& g = t.child(0);
    const Term& f = t.child(1);
    return Term::comp(derive(g), Term::pair(Term::comp(f, Term::pi0()), derive(f)));
  }
  case K::Pair:
    return Term::pair(derive(t.child(0)), derive(t.child(1)));
  case K::Add:
    return Term::add(derive(t.child(0)), derive(t.child(1)));
  case K::Eps:
    return Term::eps(derive(t.child(0)));
  case K::D:
  case K::Prim:
    return Term::d(t);
  }
  return t;
}

} // namespace

Term symbolic_derive(const Term& t) { return derive(normalize(t)); }

Term symbolic_derive(const Term& t, int order) {
  Term out = t;
  for (int i = 0; i < order; ++i)
    out = symbolic_derive(out);
  return out;
}

namespace {

struct TermGen {
  const std::vector<std::string>& prims;
  Rng& rng;

  Term leaf(bool dp, bool cp, int depth) {
    std::vector<Term> options{Term::zero()};
    if (depth >= 1)
      options.push_back(Term::comp(Term::zero(), Term::one()));
    if (dp == cp)
      options.push_back(Term::id());
    if (dp && !cp) {
      options.push_back(Term::pi0());
      options.push_back(Term::pi1());
    }
    if (!dp && !cp)
      for (const auto& p : prims)
        options.push_back(Term::prim(p));
    return options[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(options.size()) - 1))];
  }

  Term gen(bool dp, bool cp, int depth) {
    if (depth <= 0 || rng.uniform_int(0, 5) == 0)
      return leaf(dp, cp, depth);
    for (;;) {
      switch (rng.uniform_int(0, 5)) {
      case 0: {
        const bool mid = rng.coin();
        return Term::comp(gen(mid, cp, depth - 1), gen(dp, mid, depth - 1));
      }
      case 1:
        if (cp)
          return Term::pair(gen(dp, false, depth - 1), gen(dp, false, depth - 1));
        break;
      case 2:
        return Term::add(gen(dp, cp, depth - 1), gen(dp, cp, depth - 1));
      case 3:
        return Term::eps(gen(dp, cp, depth - 1));
      case 4:
        // d : (A -> C) gives (A x A -> C)
        if (dp)
          return Term::d(gen(false, cp, depth - 1));
        break;
      default:
        return leaf(dp, cp, depth);
      }
    }
  }
};

} // namespace

Term random_term(bool dom_pair, bool cod_pair, int depth,
                 const std::vector<std::string>& primitives, Rng& rng) {
  TermGen g{primitives, rng};
  return g.gen(dom_pair, cod_pair, depth);
}

} // namespace diffcat
