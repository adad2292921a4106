#include "diffcat/change_action.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/model.hpp"

namespace diffcat {

ChangeActionStruct induced_action(const Model& model, const Space& a) {
  const Morphism oplus =
      add(proj0(a, a), model.epsilon(proj1(a, a))).renamed("oplus");
  const Morphism plus = add(proj0(a, a), proj1(a, a)).renamed("plus");
  return {a, a, oplus, plus, zero_map(Space::terminal(), a)};
}

namespace {

struct Ops {
  const ChangeActionStruct& ca;

  Morphism plus(const Morphism& l, const Morphism& r) const {
    return compose(ca.plus, pair(l, r));
  }
  Morphism oplus(const Morphism& l, const Morphism& r) const {
    return compose(ca.oplus, pair(l, r));
  }
  Morphism zero(const Space& p) const { return compose(ca.zero, terminal_map(p)); }
};

LawReport start(const std::string& axiom, const std::string& label,
                const EqualityStrategy& strat) {
  LawReport r;
  r.axiom = axiom;
  r.model = label;
  r.strategy = strat.describe();
  r.seed = strat.seed;
  return r;
}

} // namespace

std::vector<LawReport> check_change_action(const ChangeActionStruct& ca,
                                           const EqualityStrategy& strat,
                                           const std::string& label,
                                           const std::optional<Morphism>& reindex) {
  const Ops ops{ca};
  const Space& a = ca.base;
  const Space& d = ca.delta;
  std::vector<LawReport> out;

  {
    const Space p = power(d, 3);
    const Morphism u = power_proj(d, 3, 0), v = power_proj(d, 3, 1), w = power_proj(d, 3, 2);
    LawReport r = start("CA1", label, strat);
    r.subject = ca.plus.name();
    r.absorb(morphisms_equal(ops.plus(ops.zero(p), u), u, strat), "0 + u = u");
    r.absorb(morphisms_equal(ops.plus(u, ops.zero(p)), u, strat), "u + 0 = u");
    r.absorb(morphisms_equal(ops.plus(ops.plus(u, v), w), ops.plus(u, ops.plus(v, w)), strat),
             "(u + v) + w = u + (v + w)");
    out.push_back(std::move(r));
  }

  const Space p = Space::product(a, Space::product(d, d));
  const Morphism x = proj0(a, Space::product(d, d));
  const Morphism dd = proj1(a, Space::product(d, d));
  const Morphism u = compose(proj0(d, d), dd);
  const Morphism v = compose(proj1(d, d), dd);
  {
    LawReport r = start("CA2", label, strat);
    r.subject = ca.oplus.name();
    r.absorb(morphisms_equal(ops.oplus(x, ops.zero(p)), x, strat), "x (+) 0 = x");
    r.absorb(morphisms_equal(ops.oplus(x, ops.plus(u, v)), ops.oplus(ops.oplus(x, u), v), strat),
             "x (+) (u + v) = (x (+) u) (+) v");
    out.push_back(std::move(r));
  }
  {
    // The same identities read on parallel maps out of the point space,
    // plus compatibility of (+) with precomposition.
    const Morphism k = reindex ? *reindex : scale(2, identity(p)).renamed("double");
    LawReport r = start("CA-derived", label, strat);
    r.subject = ca.oplus.name();
    r.absorb(morphisms_equal(ops.plus(u, ops.zero(p)), u, strat), "(i) g + 0 = g");
    r.absorb(morphisms_equal(ops.plus(ops.zero(p), u), u, strat), "(i) 0 + g = g");
    r.absorb(morphisms_equal(ops.plus(u, ops.plus(v, u)),
                             ops.plus(ops.plus(u, v), u), strat),
             "(ii) g + (h + g) = (g + h) + g");
    r.absorb(morphisms_equal(ops.oplus(x, ops.zero(p)), x, strat), "(iii) f (+) 0 = f");
    r.absorb(morphisms_equal(ops.oplus(x, ops.plus(u, v)), ops.oplus(ops.oplus(x, u), v), strat),
             "(iv) f (+) (g + h) = (f (+) g) (+) h");
    r.absorb(morphisms_equal(compose(ops.oplus(x, u), k),
                             ops.oplus(compose(x, k), compose(u, k)), strat),
             "(v) (f (+) g) k = (f k) (+) (g k)");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LawReport> check_cad_derivative(const Morphism& f, const Morphism& df,
                                            const ChangeActionStruct& ca_a,
                                            const ChangeActionStruct& ca_b,
                                            const EqualityStrategy& strat,
                                            const std::string& label) {
  const Space& a = ca_a.base;
  const Space& da = ca_a.delta;
  if (!(f.dom() == a) || !(f.cod() == ca_b.base))
    throw TypeMismatch(f.name() + " does not map " + a.to_string() + " to " +
                       ca_b.base.to_string());
  if (!(df.dom() == Space::product(a, da)) || !(df.cod() == ca_b.delta))
    throw TypeMismatch(df.name() + " is not a map " + a.to_string() + " x " + da.to_string() +
                       " -> " + ca_b.delta.to_string());
  const Ops in{ca_a};
  const Ops out_ops{ca_b};
  std::vector<LawReport> out;
  {
    const Morphism x = proj0(a, da), y = proj1(a, da);
    LawReport r = start("CAD1", label, strat);
    r.subject = f.name();
    r.absorb(morphisms_equal(compose(f, in.oplus(x, y)),
                             out_ops.oplus(compose(f, x), compose(df, pair(x, y))), strat),
             "f(x (+) y) = f(x) (+) df(x,y)");
    out.push_back(std::move(r));
  }
  {
    const Space dd = Space::product(da, da);
    const Space p = Space::product(a, dd);
    const Morphism x = proj0(a, dd);
    const Morphism y = compose(proj0(da, da), proj1(a, dd));
    const Morphism z = compose(proj1(da, da), proj1(a, dd));
    LawReport r = start("CAD2", label, strat);
    r.subject = f.name();
    r.absorb(morphisms_equal(compose(df, pair(x, in.plus(y, z))),
                             out_ops.plus(compose(df, pair(x, y)),
                                          compose(df, pair(in.oplus(x, y), z))),
                             strat),
             "df(x, y + z) = df(x,y) + df(x (+) y, z)");
    r.absorb(morphisms_equal(compose(df, pair(x, in.zero(p))), out_ops.zero(p), strat),
             "df(x, 0) = 0");
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace diffcat
