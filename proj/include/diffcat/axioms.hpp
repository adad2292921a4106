#pragma once

#include "diffcat/errors.hpp"
#include "diffcat/law_report.hpp"
#include "diffcat/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diffcat {

enum class AxiomId {
  CdC0, CdC1, CdC2, CdC3, CdC4, CdC5, CdC6, CdC7, CdC6a, CdC7a,
  E1, E2, E3,
  CDC2Additivity,
  DEpsI, DEpsII, DEpsIII, Eq1Strong,
  Linearity, EpsLinearity, EpsVanishing,
  F1, F2, F3, F4,
  OplusEps,
};

std::string axiom_name(AxiomId id);
/// Accepts the printed names (`CdC0`, `CDC2-additivity`, `DEps-i`, ...).
AxiomId parse_axiom(std::string_view name);
const std::vector<AxiomId>& all_axiom_ids();
/// Equations every Cartesian difference category satisfies: CdC0-7, CdC6a,
/// CdC7a, E1-E3, DEps-i..iii, Eq1-strong and OplusEps.
const std::vector<AxiomId>& law_axiom_ids();
/// `all`, or a comma separated list of names.
std::vector<AxiomId> parse_axiom_list(std::string_view text);

/// Number of generalized points an axiom schema quantifies over.
int axiom_arity(AxiomId id);

/// One side-by-side instance of an axiom schema.
template <class Map>
struct Equation {
  std::string clause;
  Map lhs;
  Map rhs;
};

/// Adapter for the base category of a model. Generalized points are the
/// projections out of P = A^k.
class BaseCategory {
public:
  using Map = Morphism;

  explicit BaseCategory(const Model& model) : model_(&model) {}

  const Model& model() const noexcept { return *model_; }
  std::string model_name() const { return model_->name(); }

  static const Space& dom(const Map& f) { return f.dom(); }
  static const Space& cod(const Map& f) { return f.cod(); }
  static const std::string& name(const Map& f) { return f.name(); }

  Map id(const Space& a) const { return identity(a); }
  Map p0(const Space& a, const Space& b) const { return proj0(a, b); }
  Map p1(const Space& a, const Space& b) const { return proj1(a, b); }
  Map comp(const Map& g, const Map& f) const { return compose(g, f); }
  Map pair(const Map& f, const Map& g) const { return diffcat::pair(f, g); }
  Map add(const Map& f, const Map& g) const { return diffcat::add(f, g); }
  Map zero(const Space& d, const Space& c) const { return zero_map(d, c); }
  Map eps(const Map& f) const { return model_->epsilon(f); }
  Map d(const Map& f) const { return model_->derivative(f); }

  std::pair<Space, std::vector<Map>> points(const Space& a, int k) const;

  EqualityReport equal(const Map& lhs, const Map& rhs, const EqualityStrategy& strat) const {
    return morphisms_equal(lhs, rhs, strat);
  }

private:
  const Model* model_;
};

/// Instantiates both sides of every equation of `id` for subject f : A -> B,
/// with g parallel to f and h composable after f (h : B -> C).
template <class Cat>
std::vector<Equation<typename Cat::Map>> axiom_equations(const Cat& c, AxiomId id,
                                                         const typename Cat::Map& f,
                                                         const typename Cat::Map& g,
                                                         const typename Cat::Map& h) {
  using Map = typename Cat::Map;
  const Space a = Cat::dom(f);
  const Space b = Cat::cod(f);
  const int k = axiom_arity(id);
  std::vector<Equation<Map>> out;
  if (k == 0)
    return out;

  const auto [p, pts] = c.points(a, k);
  const auto at = [&](const Map& m, const Map& arg) { return c.comp(m, arg); };
  const auto pr = [&](const Map& l, const Map& r) { return c.pair(l, r); };
  const auto plus = [&](const Map& l, const Map& r) { return c.add(l, r); };
  const auto zero_a = c.zero(p, a);
  const auto pt = [&](int i) -> const Map& { return pts[static_cast<std::size_t>(i)]; };
  const auto eq = [&](std::string clause, Map lhs, Map rhs) {
    out.push_back({std::move(clause), std::move(lhs), std::move(rhs)});
  };

  switch (id) {
  case AxiomId::CdC0: {
    const Map &x = pt(0), &y = pt(1);
    eq("f(x + eps y) = f(x) + eps(df(x,y))", at(f, plus(x, c.eps(y))),
       plus(at(f, x), c.eps(at(c.d(f), pr(x, y)))));
    break;
  }
  case AxiomId::CdC1: {
    const Map &x = pt(0), &y = pt(1);
    const Map xy = pr(x, y);
    eq("d(f+g) = df + dg", at(c.d(c.add(f, g)), xy),
       plus(at(c.d(f), xy), at(c.d(g), xy)));
    eq("d0 = 0", at(c.d(c.zero(a, b)), xy), c.zero(p, b));
    eq("d(eps f) = eps(df)", at(c.d(c.eps(f)), xy), at(c.eps(c.d(f)), xy));
    break;
  }
  case AxiomId::CdC2: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    eq("df(x, y+z) = df(x,y) + df(x + eps y, z)", at(c.d(f), pr(x, plus(y, z))),
       plus(at(c.d(f), pr(x, y)), at(c.d(f), pr(plus(x, c.eps(y)), z))));
    eq("df(x, 0) = 0", at(c.d(f), pr(x, zero_a)), c.zero(p, b));
    break;
  }
  case AxiomId::CdC3: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2), &w = pt(3);
    const Map uv = pr(pr(x, y), pr(z, w));
    eq("d(id) = pi1", at(c.d(c.id(a)), pr(x, y)), y);
    eq("d(pi0) = pi0 pi1", at(c.d(c.p0(a, a)), uv), z);
    eq("d(pi1) = pi1 pi1", at(c.d(c.p1(a, a)), uv), w);
    break;
  }
  case AxiomId::CdC4: {
    const Map xy = pr(pt(0), pt(1));
    eq("d<f,g> = <df,dg>", at(c.d(c.pair(f, g)), xy), pr(at(c.d(f), xy), at(c.d(g), xy)));
    break;
  }
  case AxiomId::CdC5: {
    const Map &x = pt(0), &y = pt(1);
    eq("d(h f)(x,y) = dh(f x, df(x,y))", at(c.d(c.comp(h, f)), pr(x, y)),
       at(c.d(h), pr(at(f, x), at(c.d(f), pr(x, y)))));
    break;
  }
  case AxiomId::CdC6: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    eq("ddf((x,y),(0,z)) = df(x + eps y, z)", at(c.d(c.d(f)), pr(pr(x, y), pr(zero_a, z))),
       at(c.d(f), pr(plus(x, c.eps(y)), z)));
    break;
  }
  case AxiomId::CdC7: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    const Map ddf = c.d(c.d(f));
    eq("ddf((x,y),(z,0)) = ddf((x,z),(y,0))", at(ddf, pr(pr(x, y), pr(z, zero_a))),
       at(ddf, pr(pr(x, z), pr(y, zero_a))));
    break;
  }
  case AxiomId::CdC6a: {
    const Map &x = pt(0), &y = pt(1);
    eq("ddf((x,0),(0,y)) = df(x,y)", at(c.d(c.d(f)), pr(pr(x, zero_a), pr(zero_a, y))),
       at(c.d(f), pr(x, y)));
    break;
  }
  case AxiomId::CdC7a: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2), &w = pt(3);
    const Map ddf = c.d(c.d(f));
    eq("ddf((x,y),(z,w)) = ddf((x,z),(y,w))", at(ddf, pr(pr(x, y), pr(z, w))),
       at(ddf, pr(pr(x, z), pr(y, w))));
    break;
  }
  case AxiomId::E1: {
    const Map& x = pt(0);
    eq("eps(f+g) = eps f + eps g", at(c.eps(c.add(f, g)), x),
       plus(at(c.eps(f), x), at(c.eps(g), x)));
    eq("eps 0 = 0", at(c.eps(c.zero(a, b)), x), c.zero(p, b));
    break;
  }
  case AxiomId::E2: {
    const Map& x = pt(0);
    eq("eps(h f) = eps(h) f", at(c.eps(c.comp(h, f)), x), at(c.comp(c.eps(h), f), x));
    break;
  }
  case AxiomId::E3: {
    const Map xy = pr(pt(0), pt(1));
    const Map eps_id = c.eps(c.id(Space::product(a, a)));
    eq("eps(pi0) = pi0 eps(1)", at(c.eps(c.p0(a, a)), xy), at(c.comp(c.p0(a, a), eps_id), xy));
    eq("eps(pi1) = pi1 eps(1)", at(c.eps(c.p1(a, a)), xy), at(c.comp(c.p1(a, a), eps_id), xy));
    break;
  }
  case AxiomId::CDC2Additivity: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    eq("df(x, y+z) = df(x,y) + df(x,z)", at(c.d(f), pr(x, plus(y, z))),
       plus(at(c.d(f), pr(x, y)), at(c.d(f), pr(x, z))));
    eq("df(x, 0) = 0", at(c.d(f), pr(x, zero_a)), c.zero(p, b));
    break;
  }
  case AxiomId::DEpsI:
  case AxiomId::F3: {
    const Map &x = pt(0), &y = pt(1);
    eq("df(x, eps y) = eps(df)(x,y)", at(c.d(f), pr(x, c.eps(y))), at(c.eps(c.d(f)), pr(x, y)));
    break;
  }
  case AxiomId::DEpsII: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    const Map edf = c.eps(c.d(f));
    eq("eps(df)(x + eps y, z) = eps(df)(x + eps^2 y, z)", at(edf, pr(plus(x, c.eps(y)), z)),
       at(edf, pr(plus(x, c.eps(c.eps(y))), z)));
    break;
  }
  case AxiomId::DEpsIII:
  case AxiomId::Eq1Strong: {
    const Map &x = pt(0), &y = pt(1), &z = pt(2);
    const Map point = pr(pr(x, y), pr(z, zero_a));
    const Map e1 = c.eps(c.d(c.d(f)));
    const Map e2 = c.eps(e1);
    if (id == AxiomId::Eq1Strong)
      eq("eps(ddf) = eps^2(ddf) at ((x,y),(z,0))", at(e1, point), at(e2, point));
    else
      eq("eps^2(ddf) = eps^3(ddf) at ((x,y),(z,0))", at(e2, point), at(c.eps(e2), point));
    break;
  }
  case AxiomId::Linearity: {
    const Map &x = pt(0), &y = pt(1);
    eq("df = f pi1", at(c.d(f), pr(x, y)), at(f, y));
    break;
  }
  case AxiomId::EpsLinearity: {
    const Map &x = pt(0), &y = pt(1);
    eq("d(eps f) = eps(f) pi1", at(c.d(c.eps(f)), pr(x, y)), at(c.eps(f), y));
    break;
  }
  case AxiomId::EpsVanishing: {
    const Map& x = pt(0);
    eq("eps(1) = 0", at(c.eps(c.id(a)), x), zero_a);
    break;
  }
  case AxiomId::F2: {
    const Map u = pr(pt(0), pt(1));
    const Map v = pr(pt(2), pt(3));
    const Map oplus = c.add(c.p0(a, a), c.eps(c.p1(a, a)));
    const Map sum = c.add(c.p0(a, a), c.p1(a, a));
    eq("d(oplus) = oplus pi1", at(c.d(oplus), pr(u, v)), at(oplus, v));
    eq("d(+) = + pi1", at(c.d(sum), pr(u, v)), at(sum, v));
    break;
  }
  case AxiomId::OplusEps: {
    const Map &x = pt(0), &y = pt(1);
    const Map oplus = c.add(c.p0(a, a), c.eps(c.p1(a, a)));
    eq("x (+) y = x + eps y", at(oplus, pr(x, y)), plus(x, c.eps(y)));
    break;
  }
  case AxiomId::F1:
  case AxiomId::F4:
    break;
  }
  return out;
}

/// Checks every equation of `id` and folds them into one report. Evaluation
/// errors (overflow, model restrictions) yield an Unknown verdict.
template <class Cat>
LawReport check_axiom_in(const Cat& c, AxiomId id, const typename Cat::Map& f,
                         const typename Cat::Map& g, const typename Cat::Map& h,
                         const EqualityStrategy& strat) {
  LawReport report;
  report.axiom = axiom_name(id);
  report.model = c.model_name();
  report.subject = Cat::name(f);
  report.strategy = strat.describe();
  report.seed = strat.seed;
  try {
    for (const auto& e : axiom_equations(c, id, f, g, h))
      report.absorb(c.equal(e.lhs, e.rhs, strat), e.clause);
  } catch (const NotEnumerable&) {
    throw;
  } catch (const SizeExceeded&) {
    throw;
  } catch (const Error& err) {
    report.status = Verdict::Unknown;
    report.clause = err.what();
  }
  return report;
}

} // namespace diffcat
