#include "support.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/kernel.hpp"
#include "diffcat/models/findiff.hpp"
#include "diffcat/rng.hpp"
#include "diffcat/subjects.hpp"
#include "diffcat/tangent.hpp"
#include "diffcat/term.hpp"

#include <doctest.h>

using namespace diffcat;
using namespace diffcat::testing;

namespace {

const auto kSampled = EqualityStrategy::automatic(48, 17);

struct ModelCase {
  std::unique_ptr<Model> model;
  Space base;
};

std::vector<ModelCase> all_models() {
  std::vector<ModelCase> out;
  out.push_back({make_model("findiff"), Z(7)});
  out.push_back({make_model("smooth"), Space::real(1)});
  out.push_back({make_model("module:r=2"), Space::integers()});
  out.push_back({make_model("streams:k=4"), Space::stream(Z(3), 4)});
  return out;
}

std::vector<std::string> primitive_names(const ModelCase& c) {
  std::vector<std::string> out;
  for (const auto& p : primitive_subjects(*c.model, c.base))
    out.push_back(p.name());
  return out;
}

std::size_t syntax_position(std::string_view text) {
  try {
    parse_term(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

} // namespace

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"id", "pi0", "(comp (prim sq) (pair id id))", "(d (d (prim sin)))",
                           "(add (eps pi1) (pair zero one))"}) {
    const Term t = parse_term(text);
    CHECK(print_term(t) == text);
    CHECK(parse_term(print_term(t)) == t);
  }
  CHECK(print_term(parse_term("  ( comp   id\n pi0 ) ")) == "(comp id pi0)");
  CHECK(parse_term("(d (prim sq))").depth() == 1);
  CHECK(parse_term("id").depth() == 0);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(syntax_position("(comp id") == 8);
  CHECK(syntax_position("(frob id)") == 1);
  CHECK(syntax_position("idd") == 0);
  CHECK(syntax_position("id id") == 3);
  CHECK(syntax_position(")") == 0);
  CHECK(syntax_position("") == 0);
  CHECK(syntax_position("(prim)") == 5);
}

TEST_CASE("typechecking") {
  const Space i = Space::integers();
  const auto sq = typecheck(parse_term("(prim sq)"), i);
  CHECK(sq.dom == i);
  CHECK(sq.cod == i);
  const auto dsq = typecheck(parse_term("(d (prim sq))"), i);
  CHECK(dsq.dom == prod(i, i));
  CHECK(typecheck(parse_term("pi1"), i, prod(Z(2), Z(3))).cod == Z(3));
  const auto pr = typecheck(parse_term("(pair (prim sq) id)"), i);
  CHECK(pr.cod == prod(i, i));
  CHECK(typecheck(parse_term("id"), i).dom == i);

  try {
    typecheck(parse_term("(comp (prim sq) (pair id id))"), i);
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.path().rfind("root", 0) == 0);
  }
}

TEST_CASE("interpretation") {
  const FinDiffModel fd;
  const Space i = Space::integers();
  CHECK(at(interpret(parse_term("(d id)"), fd, i), "(3, 5)") == "5");
  CHECK(at(interpret(parse_term("(d (prim sq))"), fd, i), "(3, 2)") == "16");
  CHECK(at(interpret(parse_term("(comp (prim sq) (add pi0 pi1))"), fd, i), "(1, 2)") == "9");
  CHECK(at(interpret(parse_term("(eps (prim sq))"), fd, i), "4") == "16");
  CHECK(at(interpret(parse_term("(pair one zero)"), fd, i), "4") == "((), 0)");
}

TEST_CASE("symbolic derivation pushes D to the leaves") {
  CHECK(symbolic_derive(parse_term("id")) == parse_term("pi1"));
  CHECK(print_term(symbolic_derive(parse_term("(prim sq)"))) == "(d (prim sq))");
  CHECK(symbolic_derive(parse_term("(prim sq)"), 0) == parse_term("(prim sq)"));
  CHECK(symbolic_derive(parse_term("(comp (prim sq) (prim sq))")).derivatives_at_leaves());
  CHECK(parse_term("(d (d (prim sq)))").derivatives_at_leaves());
  CHECK_FALSE(parse_term("(d id)").derivatives_at_leaves());
  CHECK_FALSE(parse_term("(d (comp id id))").derivatives_at_leaves());

  Rng rng(3);
  for (int n = 0; n < 100; ++n) {
    const Term t = random_term(rng.coin(), rng.coin(), 4, {"sq", "cube"}, rng);
    CHECK(t.depth() <= 4);
    CHECK(symbolic_derive(t, 2).derivatives_at_leaves());
  }
}

TEST_CASE("symbolic derivative agrees with the semantic derivative") {
  for (const auto& c : all_models()) {
    CAPTURE(c.model->name());
    const auto names = primitive_names(c);
    const Space pair = prod(c.base, c.base);
    Rng rng(derive_seed(99, static_cast<std::uint64_t>(c.model->tag().kind)));
    for (int n = 0; n < 40; ++n) {
      const bool dom_pair = rng.coin();
      const Term t = random_term(dom_pair, rng.coin(), 3, names, rng);
      CAPTURE(print_term(t));
      const Space dom = dom_pair ? pair : c.base;
      const Morphism semantic = c.model->derivative(interpret(t, *c.model, c.base, dom));
      const Morphism symbolic =
          interpret(symbolic_derive(t), *c.model, c.base, prod(dom, dom));
      CHECK(morphisms_equal(symbolic, semantic, kSampled).pass);
    }
  }
}

TEST_CASE("second symbolic derivative satisfies the mixed-partial symmetry") {
  const FinDiffModel fd;
  const Space a = Z(5);
  Rng rng(11);
  for (int n = 0; n < 20; ++n) {
    const Term t = random_term(false, false, 3, {"sq", "cube"}, rng);
    const Morphism f = interpret(t, fd, a);
    const auto r = check_axiom(fd, AxiomId::CdC6a, {f}, EqualityStrategy::exhaustive());
    CHECK(r.passed());
    const Morphism dd = interpret(symbolic_derive(t, 2), fd, a, T_space(T_space(a)));
    CHECK(morphisms_equal(dd, fd.derivative(fd.derivative(f)), EqualityStrategy::exhaustive())
              .pass);
  }
}
