#include "diffcat/tangent.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/kernel.hpp"

namespace diffcat {

Space T_space(const Space& a) { return Space::product(a, a); }

Morphism T_map(const Model& model, const Morphism& f) {
  const Space& a = f.dom();
  return pair(compose(f, proj0(a, a)), model.derivative(f)).renamed("T(" + f.name() + ")");
}

Morphism eta(const Model&, const Space& a) {
  return pair(identity(a), zero_map(a, a)).renamed("eta");
}

namespace {

/// pi_i o pi_j out of (A x A) x (A x A), written pi_ij.
Morphism pi(int i, int j, const Space& a, const Space& b) {
  const Space left = Space::product(a, b);
  const Morphism inner = i == 0 ? proj0(a, b) : proj1(a, b);
  const Morphism outer_proj = j == 0 ? proj0(left, left) : proj1(left, left);
  return compose(inner, outer_proj);
}

LawReport start(const std::string& axiom, const Model& model, const std::string& subject,
                const EqualityStrategy& strat) {
  LawReport r;
  r.axiom = axiom;
  r.model = model.name();
  r.subject = subject;
  r.strategy = strat.describe();
  r.seed = strat.seed;
  return r;
}

/// Evaluation errors become an Unknown verdict, as in the axiom checkers.
template <class F>
void guarded(LawReport& r, F&& body) {
  try {
    body();
  } catch (const NotEnumerable&) {
    throw;
  } catch (const SizeExceeded&) {
    throw;
  } catch (const Error& err) {
    r.status = Verdict::Unknown;
    r.clause = err.what();
  }
}

} // namespace

Morphism mu(const Model& model, const Space& a) {
  const Morphism x = pi(0, 0, a, a), y = pi(1, 0, a, a), z = pi(0, 1, a, a), w = pi(1, 1, a, a);
  return pair(x, add(add(y, z), model.epsilon(w))).renamed("mu");
}

Morphism phi(const Space& a, const Space& b) {
  // ((a,b),(c,d)) in T(A x B)
  const Morphism pa = pi(0, 0, a, b), pb = pi(1, 0, a, b), pc = pi(0, 1, a, b),
                 pd = pi(1, 1, a, b);
  return pair(pair(pa, pc), pair(pb, pd)).renamed("phi");
}

Morphism phi_inv(const Space& a, const Space& b) {
  // ((a,c),(b,d)) in T(A) x T(B)
  const Space ta = T_space(a), tb = T_space(b);
  const Morphism pa = compose(proj0(a, a), proj0(ta, tb)), pc = compose(proj1(a, a), proj0(ta, tb));
  const Morphism pb = compose(proj0(b, b), proj1(ta, tb)), pd = compose(proj1(b, b), proj1(ta, tb));
  return pair(pair(pa, pb), pair(pc, pd)).renamed("phi_inv");
}

KleisliMap::KleisliMap(Morphism f0_, Morphism f1_)
    : KleisliMap(f0_, f1_, "<" + f0_.name() + ", " + f1_.name() + ">") {}

KleisliMap::KleisliMap(Morphism f0_, Morphism f1_, std::string name_)
    : f0(std::move(f0_)), f1(std::move(f1_)), name(std::move(name_)) {
  if (!(f0.dom() == f1.dom()) || !(f0.cod() == f1.cod()))
    throw DomainMismatch("Kleisli components " + f0.name() + " and " + f1.name() +
                         " are not parallel");
}

Morphism KleisliMap::as_morphism() const { return pair(f0, f1).renamed(name); }

EqualityStrategy kleisli_oracle_default() { return EqualityStrategy::sampled(8, 0x6b1e15); }

Morphism sharp(const Model& model, const KleisliMap& f) {
  const Space& a = f.dom();
  const Morphism p0 = proj0(a, a);
  return pair(compose(f.f0, p0),
              add(add(compose(f.f1, p0), model.derivative(f.f0)),
                  model.epsilon(model.derivative(f.f1))))
      .renamed("sharp(" + f.name + ")");
}

Morphism sharp_oracle(const Model& model, const KleisliMap& f) {
  return compose(mu(model, f.cod()), T_map(model, f.as_morphism()));
}

KleisliMap kleisli_compose_definitional(const Model& model, const KleisliMap& g,
                                        const KleisliMap& f) {
  if (!(f.cod() == g.dom()))
    throw DomainMismatch("cannot Kleisli-compose " + g.name + " after " + f.name);
  const Space& c = g.cod();
  const Morphism h =
      compose(mu(model, c), compose(T_map(model, g.as_morphism()), f.as_morphism()));
  return KleisliMap(compose(proj0(c, c), h), compose(proj1(c, c), h),
                    "mu T(" + g.name + ") " + f.name);
}

KleisliMap kleisli_compose(const Model& model, const KleisliMap& g, const KleisliMap& f,
                           const std::optional<EqualityStrategy>& oracle) {
  if (!(f.cod() == g.dom()))
    throw DomainMismatch("cannot Kleisli-compose " + g.name + " : " + g.dom().to_string() +
                         " -> ... after " + f.name + " : ... -> " + f.cod().to_string());
  const Morphism h0 = compose(g.f0, f.f0);
  const Morphism h1 = add(compose(model.derivative(g.f0), pair(f.f0, f.f1)),
                          compose(g.f1, add(f.f0, model.epsilon(f.f1))));
  KleisliMap out(h0, h1, "kcomp(" + g.name + ", " + f.name + ")");
  if (oracle) {
    const KleisliMap def = kleisli_compose_definitional(model, g, f);
    const EqualityReport eq = morphisms_equal(out.as_morphism(), def.as_morphism(), *oracle);
    if (!eq.pass)
      throw OracleMismatch("Kleisli composition " + out.name + " disagrees with mu o T(g) o f at " +
                           eq.counterexample->point + ": " + eq.counterexample->lhs + " vs " +
                           eq.counterexample->rhs);
  }
  return out;
}

KleisliMap kleisli_identity(const Space& a) {
  return KleisliMap(identity(a), zero_map(a, a), "eta");
}

KleisliMap kleisli_pair(const KleisliMap& f, const KleisliMap& g) {
  return KleisliMap(pair(f.f0, g.f0), pair(f.f1, g.f1), "kpair(" + f.name + ", " + g.name + ")");
}

KleisliMap kleisli_proj(int i, const Space& a, const Space& b) {
  const Space ab = Space::product(a, b);
  if (i == 0)
    return KleisliMap(proj0(a, b), zero_map(ab, a), "kpi0");
  return KleisliMap(proj1(a, b), zero_map(ab, b), "kpi1");
}

KleisliMap kleisli_add(const KleisliMap& f, const KleisliMap& g) {
  return KleisliMap(add(f.f0, g.f0), add(f.f1, g.f1), "kadd(" + f.name + ", " + g.name + ")");
}

KleisliMap kleisli_zero(const Space& a, const Space& b) {
  return KleisliMap(zero_map(a, b), zero_map(a, b), "kzero");
}

KleisliMap kleisli_epsilon(const Model& model, const KleisliMap& f) {
  return KleisliMap(model.epsilon(f.f0), model.epsilon(f.f1), "keps(" + f.name + ")");
}

KleisliMap kleisli_derivative(const Model& model, const KleisliMap& f) {
  return KleisliMap(model.derivative(f.f0), model.derivative(f.f1), "kd(" + f.name + ")");
}

std::pair<Space, std::vector<KleisliMap>> KleisliCategory::points(const Space& a, int k) const {
  const Space ta = T_space(a);
  const Space p = power(ta, k);
  std::vector<KleisliMap> pts;
  for (int i = 0; i < k; ++i) {
    const Morphism pi_i = power_proj(ta, k, i);
    pts.emplace_back(compose(proj0(a, a), pi_i), compose(proj1(a, a), pi_i),
                     "p" + std::to_string(i));
  }
  return {p, pts};
}

EqualityReport KleisliCategory::equal(const Map& lhs, const Map& rhs,
                                      const EqualityStrategy& strat) const {
  return morphisms_equal(lhs.as_morphism(), rhs.as_morphism(), strat);
}

LawReport check_monad_laws(const Model& model, const Space& a, const EqualityStrategy& strat) {
  LawReport r = start("monad-laws", model, a.to_string(), strat);
  guarded(r, [&] {
    const Space ta = T_space(a);
    const Morphism m = mu(model, a);
    r.absorb(morphisms_equal(compose(m, eta(model, ta)), identity(ta), strat),
             "mu eta_T = 1");
    r.absorb(morphisms_equal(compose(m, T_map(model, eta(model, a))), identity(ta), strat),
             "mu T(eta) = 1");
    r.absorb(morphisms_equal(compose(m, mu(model, ta)), compose(m, T_map(model, m)), strat),
             "mu mu_T = mu T(mu)");
  });
  return r;
}

LawReport check_naturality(const Model& model, const Morphism& f, const EqualityStrategy& strat) {
  LawReport r = start("tangent-naturality", model, f.name(), strat);
  guarded(r, [&] {
    const Space& a = f.dom();
    const Space& b = f.cod();
    const Morphism tf = T_map(model, f);
    r.absorb(morphisms_equal(T_map(model, identity(a)), identity(T_space(a)), strat),
             "T(1) = 1");
    if (a == b)
      r.absorb(morphisms_equal(T_map(model, compose(f, f)), compose(tf, tf), strat),
               "T(f f) = T(f) T(f)");
    r.absorb(morphisms_equal(compose(tf, eta(model, a)), compose(eta(model, b), f), strat),
             "T(f) eta = eta f");
    r.absorb(morphisms_equal(compose(mu(model, b), T_map(model, tf)),
                             compose(tf, mu(model, a)), strat),
             "mu T(T(f)) = T(f) mu");
  });
  return r;
}

LawReport check_tangent_identities(const Model& model, const Morphism& f, const Morphism& g,
                                   const Morphism& linear, const EqualityStrategy& strat) {
  LawReport r = start("tangent-identities", model, f.name(), strat);
  guarded(r, [&] {
    const Space& a = f.dom();
    r.absorb(morphisms_equal(T_map(model, add(f, g)), add(T_map(model, f), T_map(model, g)),
                             strat),
             "T(f + g) = T(f) + T(g)");
    r.absorb(morphisms_equal(T_map(model, linear), product_map(linear, linear), strat),
             "T(l) = l x l");
    r.absorb(morphisms_equal(T_map(model, model.derivative(f)),
                             compose(model.derivative(T_map(model, f)), phi(a, a)), strat),
             "T(df) = d(Tf) phi");
    r.absorb(morphisms_equal(T_map(model, model.epsilon(f)), model.epsilon(T_map(model, f)),
                             strat),
             "T(eps f) = eps(T f)");
    const Space tta = T_space(T_space(a));
    const Morphism m = mu(model, a);
    r.absorb(morphisms_equal(model.epsilon(m), compose(m, model.epsilon(identity(tta))), strat),
             "eps(mu) = mu eps(1)");
  });
  return r;
}

LawReport check_sharp(const Model& model, const KleisliMap& f, const EqualityStrategy& strat) {
  LawReport r = start("sharp", model, f.name, strat);
  guarded(r, [&] {
    r.absorb(morphisms_equal(sharp(model, f), sharp_oracle(model, f), strat),
             "f# = mu T(f)");
  });
  return r;
}

LawReport check_kleisli_composition(const Model& model, const KleisliMap& g, const KleisliMap& f,
                                    const EqualityStrategy& strat) {
  LawReport r = start("kleisli-composition", model, g.name + " after " + f.name, strat);
  guarded(r, [&] {
    const KleisliMap closed = kleisli_compose(model, g, f, std::nullopt);
    const KleisliMap def = kleisli_compose_definitional(model, g, f);
    r.absorb(morphisms_equal(closed.as_morphism(), def.as_morphism(), strat),
             "closed form = mu T(g) f");
  });
  return r;
}

std::vector<KleisliMap> kleisli_subjects(const std::vector<Morphism>& base) {
  std::vector<KleisliMap> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Morphism& f0 = base[i];
    const Morphism& f1 = base[(i + 1) % base.size()];
    if (f0.dom() == f1.dom() && f0.cod() == f1.cod())
      out.emplace_back(f0, f1);
    else
      out.emplace_back(f0, zero_map(f0.dom(), f0.cod()));
  }
  if (!base.empty())
    out.push_back(kleisli_zero(base.front().dom(), base.front().cod()));
  return out;
}

std::vector<LawReport> check_kleisli_cdc(const Model& model,
                                         const std::vector<KleisliMap>& subjects,
                                         const EqualityStrategy& strat,
                                         std::optional<EqualityStrategy> oracle) {
  const KleisliCategory cat(model, std::move(oracle));
  std::vector<AxiomId> axioms = law_axiom_ids();
  if (model.tag().kind == ModelTag::Kind::Smooth)
    axioms.push_back(AxiomId::CDC2Additivity);
  std::vector<LawReport> out;
  const std::size_t n = subjects.size();
  for (std::size_t i = 0; i < n; ++i) {
    const KleisliMap& f = subjects[i];
    const KleisliMap* g = &f;
    const KleisliMap* h = nullptr;
    for (std::size_t j = 1; j < n; ++j) {
      const KleisliMap& s = subjects[(i + j) % n];
      if (g == &f && s.dom() == f.dom() && s.cod() == f.cod())
        g = &s;
      if (!h && s.dom() == f.cod())
        h = &s;
    }
    const KleisliMap hh = h ? *h : (f.dom() == f.cod() ? f : kleisli_identity(f.cod()));
    const EqualityStrategy sub = strat.subseeded(i);
    for (AxiomId id : axioms)
      out.push_back(check_axiom_in(cat, id, f, *g, hh, sub));
  }
  return out;
}

KleisliLinearity kleisli_linearity(const Model& model, const KleisliMap& f,
                                   const EqualityStrategy& strat) {
  const KleisliCategory cat(model, kleisli_oracle_default());
  const Space& a = f.dom();
  KleisliLinearity out;
  out.kleisli_linear =
      cat.equal(cat.d(f), cat.comp(f, cat.p1(a, a)), strat).pass;
  out.components_linear = is_linear(model, f.f0, strat).holds && is_linear(model, f.f1, strat).holds;
  return out;
}

AlgebraCandidate free_algebra(const Model& model, const Space& a) {
  return {T_space(a), mu(model, a)};
}

std::vector<LawReport> check_linear_algebra(const Model& model, const AlgebraCandidate& cand,
                                            const EqualityStrategy& strat) {
  const Space& a = cand.space;
  const Morphism& nu = cand.nu;
  if (!(nu.dom() == T_space(a)) || !(nu.cod() == a))
    throw TypeMismatch(nu.name() + " is not a map T(" + a.to_string() + ") -> " +
                       a.to_string());
  std::vector<LawReport> out;
  {
    LawReport r = start("algebra-laws", model, nu.name(), strat);
    guarded(r, [&] {
      r.absorb(morphisms_equal(compose(nu, eta(model, a)), identity(a), strat), "nu eta = 1");
      r.absorb(morphisms_equal(compose(nu, T_map(model, nu)), compose(nu, mu(model, a)), strat),
               "nu T(nu) = nu mu");
    });
    out.push_back(std::move(r));
  }
  {
    LawReport r = is_linear(model, nu, strat).reports.front();
    r.subject = nu.name();
    out.push_back(std::move(r));
  }
  if (model.tag().kind == ModelTag::Kind::FinDiff) {
    LawReport r = start("algebra-decomposition", model, nu.name(), strat);
    guarded(r, [&] {
      const Morphism e = compose(nu, pair(zero_map(a, a), identity(a))).renamed("e");
      r.absorb(is_homomorphism(e, strat), "e(y) = nu(0, y) is a homomorphism");
      r.absorb(morphisms_equal(nu, add(proj0(a, a), compose(e, proj1(a, a))), strat),
               "nu = pi0 + e pi1");
    });
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace diffcat
