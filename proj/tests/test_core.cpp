#include "support.hpp"

#include "diffcat/change_action.hpp"
#include "diffcat/equality.hpp"
#include "diffcat/errors.hpp"
#include "diffcat/models/findiff.hpp"
#include "diffcat/rng.hpp"

#include <doctest.h>

#include <set>

using namespace diffcat;
using namespace diffcat::testing;

namespace {

std::vector<std::string> rendered(const Space& s) {
  std::vector<std::string> out;
  for (const auto& e : enumerate(s))
    out.push_back(format_element(s, e));
  return out;
}

Morphism square(const Space& a) {
  return leafwise_map(a, "sq", [](std::int64_t v) { return v * v; }, nullptr);
}

} // namespace

TEST_CASE("enumerate lists every element once in canonical order") {
  CHECK(rendered(Z(3)) == std::vector<std::string>{"0", "1", "2"});
  CHECK(enumerate(prod(Z(2), Z(2))).size() == 4);
  CHECK(rendered(Space::terminal()) == std::vector<std::string>{"()"});
  CHECK(Space::terminal().cardinality() == 1u);

  for (const Space& s : {Z(5), prod(Z(3), Z(4)), Space::stream(Z(2), 3),
                         Space::bounded_int(-3, 3), prod(Space::terminal(), Z(7))}) {
    const auto all = enumerate(s);
    REQUIRE(all.size() == *s.cardinality());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      seen.insert(format_element(s, all[i]));
      CHECK(index_of(s, all[i]) == i);
      CHECK(element_at(s, i) == all[i]);
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("enumerate refuses reals and oversized spaces") {
  CHECK_THROWS_AS(enumerate(Space::real(1)), NotEnumerable);
  CHECK_THROWS_AS(enumerate(prod(Z(1000), Z(1000))), SizeExceeded);
  CHECK_NOTHROW(enumerate(prod(Z(1000), Z(1000)), 1'000'000));
}

TEST_CASE("sample is deterministic and respects ranges") {
  const Space i = Space::integers();
  const auto xs = sample(i, 3, 42);
  REQUIRE(xs.size() == 3);
  for (const auto& x : xs) {
    CHECK(x.int_at(0) >= -100);
    CHECK(x.int_at(0) <= 100);
  }
  const auto v = sample(Space::real(2), 1, 7);
  REQUIRE(v.size() == 1);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(v[0].real_at(k) >= -10.0);
    CHECK(v[0].real_at(k) <= 10.0);
  }
  for (const Space& s : {i, Space::real(3), Space::stream(Z(3), 8), prod(Z(5), i)})
    CHECK(sample(s, 20, 9) == sample(s, 20, 9));
  CHECK(sample(i, 20, 9) != sample(i, 20, 10));
}

TEST_CASE("space syntax round-trips") {
  for (const char* text : {"Z7", "Int[-100,100]", "R^2", "Stream(Z3,8)", "(Z5 x Z5)", "1",
                           "((Z2 x Z3) x Int[0,4])", "Stream(Int[-100,100],16)"})
    CHECK(parse_space(text).to_string() == text);
  CHECK(parse_space("( Z5 x Z5 )") == prod(Z(5), Z(5)));
  CHECK_THROWS_AS(parse_space("Z5 x Z5"), ParseError);
  CHECK_THROWS_AS(parse_space("Q7"), ParseError);
  CHECK_THROWS_AS(parse_space("Z0"), ParseError);
}

TEST_CASE("element text round-trips") {
  const Space s = prod(prod(Z(5), Space::integers()), Space::stream(Z(3), 3));
  const Element e = el(s, "((4, -17), [2, 0, 1])");
  CHECK(format_element(s, e) == "((4, -17), [2, 0, 1])");
  CHECK(format_element(Z(7), el(Z(7), "9")) == "2");
  CHECK(format_element(Space::real(1), el(Space::real(1), "2.5")) == "2.5");
  CHECK_THROWS_AS(el(s, "(4, -17)"), ParseError);
}

TEST_CASE("group structure is commutative and associative with unit") {
  for (const Space& s : {Z(2), Z(5), Z(11), prod(Z(2), Z(3)), Space::stream(Z(2), 2),
                         Space::bounded_int(-2, 2)}) {
    const auto all = enumerate(s);
    const Element zero = zero_element(s);
    for (const auto& a : all) {
      CHECK(add(s, a, zero) == a);
      CHECK(add(s, a, negate(s, a)) == zero);
      for (const auto& b : all) {
        CHECK(add(s, a, b) == add(s, b, a));
        for (const auto& c : all)
          CHECK(add(s, add(s, a, b), c) == add(s, a, add(s, b, c)));
      }
    }
  }
  Rng rng(5);
  const Space r = Space::real(2);
  for (int i = 0; i < 50; ++i) {
    const Element a = random_element(r, rng), b = random_element(r, rng);
    CHECK(approx_equal(r, add(r, a, b), add(r, b, a), 1e-12, 0));
  }
}

TEST_CASE("integer arithmetic detects overflow") {
  const Space i = Space::integers();
  const Element big = el(i, "4611686018427387904"); // 2^62
  CHECK_THROWS_AS(add(i, big, big), ArithmeticOverflow);
  CHECK_THROWS_AS(multiply(i, big, big), ArithmeticOverflow);
}

TEST_CASE("combinators evaluate pointwise") {
  const Space i = Space::integers();
  const Morphism inc = leafwise_map(i, "inc", [](std::int64_t v) { return v + 1; }, nullptr);
  CHECK(at(compose(square(i), inc), "2") == "9");
  CHECK(at(add(identity(Z(7)), identity(Z(7))), "3") == "6");
  CHECK(at(pair(identity(i), zero_map(i, i)), "5") == "(5, 0)");
  CHECK(at(identity(Z(3)), "2") == "2");
  CHECK(at(proj0(Z(3), Z(5)), "(1, 4)") == "1");
  CHECK(at(proj1(Z(3), Z(5)), "(1, 4)") == "4");
  CHECK(at(terminal_map(Z(3)), "2") == "()");
  CHECK(morphisms_equal(terminal_map(Z(3)), zero_map(Z(3), Space::terminal()),
                        EqualityStrategy::exhaustive())
            .pass);
  CHECK_THROWS_AS(compose(square(i), identity(Z(3))), DomainMismatch);
  CHECK_THROWS_AS(add(identity(Z(3)), identity(Z(4))), DomainMismatch);
}

TEST_CASE("left additivity holds on random triples") {
  const Space s = Z(6);
  const auto strat = EqualityStrategy::exhaustive();
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    std::vector<Element> tf, tg, th;
    for (int k = 0; k < 6; ++k) {
      tf.push_back(random_element(s, rng));
      tg.push_back(random_element(s, rng));
      th.push_back(random_element(s, rng));
    }
    const Morphism f = from_table(s, s, tf, "f"), g = from_table(s, s, tg, "g"),
                   h = from_table(s, s, th, "h");
    CHECK(morphisms_equal(compose(add(f, g), h), add(compose(f, h), compose(g, h)), strat).pass);
    CHECK(morphisms_equal(compose(zero_map(s, s), h), zero_map(s, s), strat).pass);
    // Projections and pairing.
    CHECK(morphisms_equal(compose(proj0(s, s), pair(f, g)), f, strat).pass);
    CHECK(morphisms_equal(compose(proj1(s, s), pair(f, g)), g, strat).pass);
    CHECK(morphisms_equal(add(pair(f, g), pair(h, f)), pair(add(f, h), add(g, f)), strat).pass);
  }
}

TEST_CASE("morphisms_equal decides extensional equality") {
  const auto ex = EqualityStrategy::exhaustive();
  CHECK(morphisms_equal(identity(Z(5)), identity(Z(5)), ex).pass);

  const Morphism sq = FinDiffModel().primitive("sq", Z(7));
  const Morphism xx = leafwise_map(Z(7), "xx", [](std::int64_t v) { return v * v; }, nullptr);
  const auto same = morphisms_equal(sq, xx, ex);
  CHECK(same.pass);
  CHECK(same.checked == 7);

  const Morphism inc = leafwise_map(Z(2), "inc", [](std::int64_t v) { return v + 1; }, nullptr);
  const auto diff = morphisms_equal(identity(Z(2)), inc, ex);
  CHECK_FALSE(diff.pass);
  REQUIRE(diff.counterexample);
  CHECK(diff.counterexample->point == "0");
  CHECK(diff.counterexample->lhs == "0");
  CHECK(diff.counterexample->rhs == "1");

  CHECK_THROWS_AS(morphisms_equal(identity(Z(2)), identity(Z(3)), ex), DomainMismatch);
}

TEST_CASE("equality strategy resolves and samples deterministically") {
  const auto autom = EqualityStrategy::automatic(64, 3);
  CHECK(autom.resolve(Z(7)) == EqualityStrategy::Mode::Exhaustive);
  CHECK(autom.resolve(Space::real(1)) == EqualityStrategy::Mode::Sampled);
  CHECK(autom.resolve(Space::stream(Space::integers(), 8)) == EqualityStrategy::Mode::Sampled);
  CHECK_THROWS_AS(EqualityStrategy::exhaustive().resolve(Space::real(1)), NotEnumerable);

  const Space r = Space::real(1);
  const Morphism a = leafwise_map(r, "a", nullptr, [](const DualNumber& x) { return x * x; });
  const Morphism b = leafwise_map(r, "b", nullptr,
                                  [](const DualNumber& x) { return x * x + DualNumber(1e-12); });
  const auto rep = morphisms_equal(a, b, EqualityStrategy::sampled(100, 1));
  CHECK(rep.pass);
  CHECK(rep.checked == 100);

  std::vector<std::string> first, second;
  for_each_point(Space::integers(), EqualityStrategy::sampled(10, 8), [&](const Element& e) {
    first.push_back(format_element(Space::integers(), e));
    return true;
  });
  for_each_point(Space::integers(), EqualityStrategy::sampled(10, 8), [&](const Element& e) {
    second.push_back(format_element(Space::integers(), e));
    return true;
  });
  CHECK(first == second);
  CHECK(EqualityStrategy::sampled(10, 8).subseeded(1).seed != 8);
}

TEST_CASE("induced change actions satisfy the action laws") {
  const FinDiffModel m;
  const auto reports = check_change_action(induced_action(m, Z(5)), EqualityStrategy::exhaustive());
  CHECK(failures(reports).empty());
  REQUIRE(reports.size() >= 2);
  CHECK(reports[0].axiom == "CA1");
  CHECK(reports[1].axiom == "CA2");
  CHECK(reports[1].checked > 0);

  CHECK(failures(check_change_action(induced_action(m, Space::terminal()),
                                     EqualityStrategy::exhaustive()))
            .empty());
}

TEST_CASE("an action ignoring its base fails the action unit law") {
  const FinDiffModel m;
  ChangeActionStruct ca = induced_action(m, Z(5));
  ca.oplus = proj1(Z(5), Z(5)).renamed("pi1");
  const auto reports = check_change_action(ca, EqualityStrategy::exhaustive());
  bool unit_failed = false;
  for (const auto& r : reports)
    if (r.axiom == "CA2") {
      unit_failed = !r.passed();
      REQUIRE(r.counterexample);
      CHECK(r.clause == "x (+) 0 = x");
      // The point is (x, (u, v)) with x the first failing base element.
      CHECK(r.counterexample->point == "(1, (0, 0))");
      CHECK(r.counterexample->lhs == "0");
    }
  CHECK(unit_failed);
}

TEST_CASE("derivatives in the change action sense") {
  const FinDiffModel m;
  const Space s = Z(7);
  const auto ca = induced_action(m, s);
  const auto ex = EqualityStrategy::exhaustive();
  const Morphism sq = m.primitive("sq", s);
  const Morphism df = m.derivative(sq);
  CHECK(failures(check_cad_derivative(sq, df, ca, ca, ex)).empty());

  const auto wrong = check_cad_derivative(identity(s), zero_map(prod(s, s), s), ca, ca, ex);
  REQUIRE(!wrong.empty());
  CHECK(wrong[0].axiom == "CAD1");
  CHECK_FALSE(wrong[0].passed());
  REQUIRE(wrong[0].counterexample);
  CHECK(wrong[0].counterexample->point == "(0, 1)");

  CHECK(failures(check_cad_derivative(zero_map(s, s), zero_map(prod(s, s), s), ca, ca, ex))
            .empty());
  CHECK_THROWS_AS(check_cad_derivative(sq, sq, ca, ca, ex), TypeMismatch);
}

TEST_CASE("law reports serialize to the documented fields") {
  const FinDiffModel m;
  ChangeActionStruct ca = induced_action(m, Z(3));
  ca.oplus = proj1(Z(3), Z(3));
  const auto reports = check_change_action(ca, EqualityStrategy::exhaustive());
  for (const auto& r : reports) {
    const auto j = r.to_json();
    for (const char* key : {"axiom", "model", "subject", "strategy", "checked", "violations",
                            "seed", "status"})
      CHECK(j.contains(key));
    CHECK(j.contains("counterexample") == r.counterexample.has_value());
  }
  CHECK(total_violations(reports) > 0);
  CHECK_FALSE(all_passed(reports));
}

TEST_CASE("derived seeds are stable and distinct") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
  Rng a(1), b(1);
  for (int i = 0; i < 10; ++i)
    CHECK(a.uniform_int(-5, 5) == b.uniform_int(-5, 5));
}
