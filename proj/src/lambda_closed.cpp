#include "diffcat/lambda_closed.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/models/findiff.hpp"

namespace diffcat {

namespace {

const FinDiffModel& findiff() {
  static const FinDiffModel model;
  return model;
}

void require_product(const Morphism& f, const char* what) {
  if (f.dom().kind() != SpaceKind::Product)
    throw ShapeMismatch(std::string(what) + " needs a map out of a product, got " +
                        f.dom().to_string());
}

LawReport start(const std::string& axiom, const std::string& subject,
                const EqualityStrategy& strat) {
  LawReport r;
  r.axiom = axiom;
  r.model = findiff().name();
  r.subject = subject;
  r.strategy = strat.describe();
  r.seed = strat.seed;
  return r;
}

} // namespace

Morphism ev(const Space& a, const Space& b) {
  const Space fa = Space::function(a, b);
  const std::size_t n = b.leaf_count();
  const std::size_t table = fa.leaf_count();
  return Morphism(
      Space::product(fa, a), b,
      [a, n, table](const Element& x) {
        const auto i = index_of(a, x.slice(table, x.size() - table));
        return x.slice(static_cast<std::size_t>(i) * n, n);
      },
      "ev");
}

Morphism curry(const Morphism& f) {
  require_product(f, "curry");
  const Space& a = f.dom().left();
  const Space& b = f.dom().right();
  if (!b.is_enumerable())
    throw NotFinite("cannot tabulate over " + b.to_string());
  const Space fb = Space::function(b, f.cod());
  auto points = std::make_shared<const std::vector<Element>>(enumerate(b));
  return Morphism(
      a, fb,
      [points, fe = f.evaluator(), leaves = fb.leaf_count()](const Element& x) {
        Element out(leaves);
        std::size_t at = 0;
        for (const auto& y : *points) {
          const Element v = fe(pair_elements(x, y));
          for (std::size_t i = 0; i < v.size(); ++i)
            out.set_raw(at++, v.raw(i));
        }
        return out;
      },
      "curry(" + f.name() + ")", Traits{f.traits().additive, false});
}

Morphism uncurry(const Morphism& g) {
  if (g.cod().kind() != SpaceKind::Function)
    throw ShapeMismatch("uncurry needs a map into a function space, got " + g.cod().to_string());
  const Space& b = g.cod().arg();
  const Space& c = g.cod().res();
  return compose(ev(b, c), product_map(g, identity(b))).renamed("uncurry(" + g.name() + ")");
}

Morphism sw(const Space& a, const Space& b, const Space& c) {
  const Space ab = Space::product(a, b);
  const Morphism pa = compose(proj0(a, b), proj0(ab, c));
  const Morphism pb = compose(proj1(a, b), proj0(ab, c));
  const Morphism pc = proj1(ab, c);
  return pair(pair(pa, pc), pb).renamed("sw");
}

std::vector<Morphism> all_functions(const Space& dom, const Space& cod, std::uint64_t bound) {
  const Space fs = Space::function(dom, cod);
  const auto count = fs.cardinality();
  if (!count || *count > bound)
    throw SizeExceeded("too many functions " + dom.to_string() + " -> " + cod.to_string());
  const auto n = *dom.cardinality();
  const std::size_t width = cod.leaf_count();
  std::vector<Morphism> out;
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) {
    const Element t = element_at(fs, i);
    std::vector<Element> table;
    table.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j)
      table.push_back(t.slice(static_cast<std::size_t>(j) * width, width));
    out.push_back(from_table(dom, cod, std::move(table), format_element(fs, t)));
  }
  return out;
}

LawReport check_closed_left_additive(const std::vector<Morphism>& subjects,
                                     const EqualityStrategy& strat) {
  LawReport r = start("closed-left-additive", std::to_string(subjects.size()) + " subjects", strat);
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    const Morphism& f = subjects[i];
    const Morphism& g = subjects[(i + 1) % subjects.size()];
    const EqualityStrategy sub = strat.subseeded(i);
    if (f.dom() == g.dom() && f.cod() == g.cod())
      r.absorb(morphisms_equal(curry(add(f, g)), add(curry(f), curry(g)), sub),
               "curry(f + g) = curry f + curry g");
    require_product(f, "curry");
    r.absorb(morphisms_equal(curry(zero_map(f.dom(), f.cod())),
                             zero_map(f.dom().left(), Space::function(f.dom().right(), f.cod())),
                             sub),
             "curry 0 = 0");
  }
  return r;
}

LawReport check_dlambda_axioms(const Morphism& f, const EqualityStrategy& strat) {
  require_product(f, "check_dlambda_axioms");
  const Model& m = findiff();
  const Space& a = f.dom().left();
  const Space& b = f.dom().right();
  LawReport r = start("dlambda", f.name(), strat);
  // ((x, u), y) -> ((x, y), (u, 0)) : (A x A) x B -> (A x B) x (A x B)
  const Space aa = Space::product(a, a);
  const Morphism x = compose(proj0(a, a), proj0(aa, b));
  const Morphism u = compose(proj1(a, a), proj0(aa, b));
  const Morphism y = proj1(aa, b);
  const Morphism spread = pair(pair(x, y), pair(u, zero_map(Space::product(aa, b), b)));
  r.absorb(morphisms_equal(m.derivative(curry(f)), curry(compose(m.derivative(f), spread)), strat),
           "d[curry f] = curry(d[f] <(x,y),(u,0)>)");
  r.absorb(morphisms_equal(curry(m.epsilon(f)), m.epsilon(curry(f)), strat),
           "curry(eps f) = eps(curry f)");
  return r;
}

LawReport check_ev_derivative_identities(const Morphism& g, const Morphism& f,
                                         const EqualityStrategy& strat) {
  require_product(g, "check_ev_derivative_identities");
  const Model& m = findiff();
  const Space& a = g.dom().left();
  const Space& b = g.dom().right();
  const Space& c = g.cod();
  if (!(f.dom() == a) || !(f.cod() == b))
    throw TypeMismatch(f.name() + " is not a map " + a.to_string() + " -> " + b.to_string());
  LawReport r = start("ev-derivative", g.name() + " with " + f.name(), strat);
  const Space aa = Space::product(a, a);
  const Morphism p0 = proj0(a, a), p1 = proj1(a, a);
  const Morphism lg = curry(g);
  const Morphism dlg = m.derivative(lg);
  const Morphism df = m.derivative(f);
  const Morphism dg = m.derivative(g);
  const Morphism fp0 = compose(f, p0);
  const Morphism evbc = ev(b, c);
  const Morphism lhs = m.derivative(compose(evbc, pair(lg, f)));
  const Morphism zero_a = zero_map(aa, a);
  const Morphism first =
      add(compose(evbc, pair(dlg, fp0)),
          compose(dg, pair(pair(add(p0, m.epsilon(p1)), fp0), pair(zero_a, df))));
  const Morphism second =
      add(compose(evbc, pair(dlg, add(fp0, m.epsilon(df)))),
          compose(dg, pair(pair(p0, fp0), pair(zero_a, df))));
  r.absorb(morphisms_equal(lhs, first, strat), "(i)");
  r.absorb(morphisms_equal(lhs, second, strat), "(ii)");
  return r;
}

LawReport check_curry_roundtrip(const Morphism& f, const EqualityStrategy& strat) {
  require_product(f, "check_curry_roundtrip");
  LawReport r = start("curry-roundtrip", f.name(), strat);
  const Morphism lf = curry(f);
  r.absorb(morphisms_equal(uncurry(lf), f, strat), "uncurry(curry f) = f");
  r.absorb(morphisms_equal(curry(uncurry(lf)), lf, strat), "curry(uncurry g) = g");
  const Space& a = f.dom().left();
  const Space& b = f.dom().right();
  r.absorb(morphisms_equal(compose(sw(a, b, b), sw(a, b, b)), identity(Space::product(f.dom(), b)),
                           strat),
           "sw sw = 1");
  return r;
}

} // namespace diffcat
