#include "support.hpp"

#include "diffcat/errors.hpp"
#include "diffcat/kernel.hpp"
#include "diffcat/models/findiff.hpp"
#include "diffcat/models/smooth.hpp"
#include "diffcat/models/streams.hpp"
#include "diffcat/rng.hpp"
#include "diffcat/subjects.hpp"
#include "diffcat/tangent.hpp"

#include <doctest.h>

using namespace diffcat;
using namespace diffcat::testing;

namespace {

const auto kExhaustive = EqualityStrategy::exhaustive();
const auto kSampled = EqualityStrategy::automatic(64, 29);

struct ModelCase {
  std::unique_ptr<Model> model;
  Space space;
};

std::vector<ModelCase> all_models() {
  std::vector<ModelCase> out;
  out.push_back({make_model("findiff"), Z(5)});
  out.push_back({make_model("smooth"), Space::real(1)});
  out.push_back({make_model("module:r=2"), Space::integers()});
  out.push_back({make_model("streams:k=4"), Space::stream(Z(3), 4)});
  return out;
}

std::vector<Morphism> pool(const ModelCase& c, std::size_t n, std::uint64_t seed) {
  auto out = primitive_subjects(*c.model, c.space);
  const auto more = generate_subjects(*c.model, c.space, n, seed);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::string at_k(const KleisliMap& f, std::string_view x) { return at(f.as_morphism(), x); }

} // namespace

TEST_CASE("unit and multiplication") {
  const FinDiffModel fd;
  const SmoothModel sm;
  const Space i = Space::integers();
  CHECK(at(mu(fd, i), "((1, 2), (3, 4))") == "(1, 9)");
  CHECK(at(eta(fd, i), "7") == "(7, 0)");
  const Space r = Space::real(1);
  CHECK(at(mu(sm, r), "((1, 2), (3, 4))") == "(1, 5)");
  CHECK(T_space(Z(3)) == prod(Z(3), Z(3)));

  const Morphism swap = phi(Z(2), Z(3));
  CHECK(at(swap, "((1, 2), (0, 1))") == "((1, 0), (2, 1))");
  CHECK(morphisms_equal(compose(swap, phi_inv(Z(2), Z(3))), identity(swap.cod()), kExhaustive)
            .pass);
  CHECK(morphisms_equal(compose(phi_inv(Z(2), Z(3)), swap), identity(swap.dom()), kExhaustive)
            .pass);
}

TEST_CASE("tangent functor on maps") {
  const FinDiffModel fd;
  const Space i = Space::integers();
  const Morphism sq = fd.primitive("sq", i);
  CHECK(at(T_map(fd, sq), "(3, 2)") == "(9, 16)");
  const SmoothModel sm;
  const Morphism cube = sm.primitive("cube", Space::real(1));
  CHECK(at(T_map(sm, cube), "(2, 1)") == "(8, 12)");
}

TEST_CASE("monad laws hold in every model") {
  for (const auto& c : all_models()) {
    CAPTURE(c.model->name());
    const auto r = check_monad_laws(*c.model, c.space, kSampled);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
  const auto z3 = check_monad_laws(*make_model("findiff"), Z(3), kExhaustive);
  CHECK(z3.passed());
  CHECK(z3.checked == 9 + 9 + 6561);
}

TEST_CASE("naturality and tangent identities") {
  for (const auto& c : all_models()) {
    if (c.model->tag().kind == ModelTag::Kind::Streams)
      continue; // inherits the head-index defect of the stream operator
    const auto subjects = pool(c, 3, 4);
    const Morphism linear = c.model->admit(scale(2, identity(c.space)));
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      CAPTURE(c.model->name());
      CAPTURE(subjects[i].name());
      const auto nat = check_naturality(*c.model, subjects[i], kSampled);
      CHECK(nat.passed());
      const auto ids = check_tangent_identities(
          *c.model, subjects[i], subjects[(i + 1) % subjects.size()], linear, kSampled);
      CHECK(ids.passed());
    }
  }
}

TEST_CASE("stream naturality of mu fails exactly for non-additive maps") {
  const StreamsModel st(4);
  const Space s = Space::stream(Z(3), 4);
  const auto sq = check_naturality(st, st.primitive("sq", s), kSampled);
  CHECK_FALSE(sq.passed());
  CHECK(sq.clause == "mu T(T(f)) = T(f) mu");
  for (const char* name : {"dbl", "sum", "delay"})
    CHECK(check_naturality(st, st.primitive(name, s), kSampled).passed());
}

TEST_CASE("sharp") {
  const FinDiffModel fd;
  const Space i = Space::integers();
  const KleisliMap f(fd.primitive("sq", i), identity(i));
  CHECK(at(sharp(fd, f), "(3, 2)") == "(9, 21)");
  CHECK(at(sharp_oracle(fd, f), "(3, 2)") == "(9, 21)");
  CHECK(check_sharp(fd, f, kSampled).passed());

  const KleisliMap unit(identity(Z(5)), zero_map(Z(5), Z(5)));
  CHECK(morphisms_equal(sharp(fd, unit), identity(T_space(Z(5))), kExhaustive).pass);

  const SmoothModel sm;
  const Space r = Space::real(1);
  const KleisliMap g(sm.primitive("sq", r), zero_map(r, r));
  CHECK(at(sharp(sm, g), "(2, 1)") == "(4, 4)");
}

TEST_CASE("Kleisli composition") {
  const FinDiffModel fd;
  const Space i = Space::integers();
  const KleisliMap f(identity(i), constant(i, i, el(i, "1")), "f");
  const KleisliMap g(fd.primitive("sq", i), zero_map(i, i), "g");
  const auto full = std::optional<EqualityStrategy>(kSampled);
  const KleisliMap gf = kleisli_compose(fd, g, f, full);
  CHECK(at_k(gf, "3") == "(9, 7)");
  CHECK(at_k(kleisli_compose_definitional(fd, g, f), "3") == "(9, 7)");

  const KleisliMap unit = kleisli_identity(i);
  CHECK(morphisms_equal(kleisli_compose(fd, unit, f, full).as_morphism(), f.as_morphism(),
                        kSampled)
            .pass);
  CHECK(morphisms_equal(kleisli_compose(fd, f, unit, full).as_morphism(), f.as_morphism(),
                        kSampled)
            .pass);

  // (g o f)(x) = (g0(y0), g0(y0 + y1) - g0(y0) + g1(y0 + y1)) with (y0, y1) = f(x).
  Rng rng(8);
  const Space a = Z(5);
  for (int n = 0; n < 8; ++n) {
    const KleisliMap p(random_table(a, a, rng, "p0"), random_table(a, a, rng, "p1"));
    const KleisliMap q(random_table(a, a, rng, "q0"), random_table(a, a, rng, "q1"));
    const KleisliMap qp = kleisli_compose(fd, q, p, EqualityStrategy::exhaustive());
    for (const auto& x : enumerate(a)) {
      const Element y0 = p.f0(x), y1 = p.f1(x);
      const Element want0 = q.f0(y0);
      const Element want1 = add(a, subtract(a, q.f0(add(a, y0, y1)), want0), q.f1(add(a, y0, y1)));
      CHECK(qp.f0(x) == want0);
      CHECK(qp.f1(x) == want1);
    }
    CHECK(check_kleisli_composition(fd, q, p, kExhaustive).passed());
  }
  CHECK_THROWS_AS(kleisli_compose(fd, g, kleisli_identity(Z(5))), DomainMismatch);
}

TEST_CASE("Kleisli structure maps") {
  const FinDiffModel fd;
  const Space i = Space::integers();
  const KleisliMap d_unit = kleisli_derivative(fd, kleisli_identity(i));
  const KleisliMap p1 = kleisli_proj(1, i, i);
  CHECK(morphisms_equal(d_unit.as_morphism(), p1.as_morphism(), kSampled).pass);

  const SmoothModel sm;
  const Space r = Space::real(1);
  const KleisliMap e = kleisli_epsilon(sm, KleisliMap(sm.primitive("sin", r), identity(r)));
  CHECK(morphisms_equal(e.as_morphism(), kleisli_zero(r, r).as_morphism(), kSampled).pass);

  const KleisliMap pr = kleisli_pair(kleisli_identity(i), kleisli_identity(i));
  CHECK(at_k(pr, "2") == "((2, 2), (0, 0))");
  CHECK(at_k(kleisli_add(kleisli_identity(i), kleisli_identity(i)), "2") == "(4, 0)");
}

TEST_CASE("Kleisli difference structure") {
  const auto full = std::optional<EqualityStrategy>(EqualityStrategy::sampled(8, 3));
  for (const auto& c : all_models()) {
    if (c.model->tag().kind == ModelTag::Kind::Streams)
      continue;
    CAPTURE(c.model->name());
    const auto ks = kleisli_subjects(pool(c, 2, 5));
    CHECK(ks.back().name.find("zero") != std::string::npos);
    const auto reports = check_kleisli_cdc(*c.model, ks, kSampled, full);
    CHECK(failures(reports).empty());
    if (c.model->tag().kind == ModelTag::Kind::Smooth) {
      bool saw_additivity = false;
      for (const auto& r : reports)
        saw_additivity |= r.axiom == "CDC2-additivity";
      CHECK(saw_additivity);
    }
  }
}

TEST_CASE("Kleisli linearity matches componentwise linearity") {
  const FinDiffModel fd;
  const Space a = Z(4);
  Rng rng(13);
  for (int n = 0; n < 20; ++n) {
    const bool lin0 = rng.coin(), lin1 = rng.coin();
    const Morphism f0 = lin0 ? scale(rng.uniform_int(0, 3), identity(a)) : random_table(a, a, rng, "t");
    const Morphism f1 = lin1 ? scale(rng.uniform_int(0, 3), identity(a)) : random_table(a, a, rng, "t");
    const auto v = kleisli_linearity(fd, KleisliMap(f0, f1), kExhaustive);
    CHECK(v.kleisli_linear == v.components_linear);
  }
}

TEST_CASE("linear algebras") {
  const FinDiffModel fd;
  const Space a = Z(5);
  const Space ta = T_space(a);
  const Morphism nu = add(proj0(a, a), proj1(a, a)).renamed("x+y");
  const auto good = check_linear_algebra(fd, {a, nu}, kExhaustive);
  CHECK(failures(good).empty());
  REQUIRE(good.size() == 3);
  CHECK(good[2].axiom == "algebra-decomposition");
  CHECK(failures(check_linear_algebra(fd, {a, proj0(a, a)}, kExhaustive)).empty());

  // e(y) = 2y is linear but not idempotent, so the algebra law fails.
  const Morphism x2y = add(proj0(a, a), scale(2, proj1(a, a))).renamed("x+2y");
  const auto twice = check_linear_algebra(fd, {a, x2y}, kExhaustive);
  REQUIRE_FALSE(twice.empty());
  CHECK(twice[0].axiom == "algebra-laws");
  CHECK_FALSE(twice[0].passed());

  const Morphism sq_y =
      add(proj0(a, a), compose(fd.primitive("sq", a), proj1(a, a))).renamed("x+y^2");
  const auto bad = check_linear_algebra(fd, {a, sq_y}, kExhaustive);
  REQUIRE(bad.size() >= 2);
  CHECK(bad[1].axiom == "Linearity");
  CHECK_FALSE(bad[1].passed());

  for (const auto& c : all_models()) {
    CAPTURE(c.model->name());
    CHECK(failures(check_linear_algebra(*c.model, free_algebra(*c.model, c.space), kSampled))
              .empty());
  }
  CHECK(ta == nu.dom());
}
