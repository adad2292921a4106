#pragma once

#include "diffcat/axioms.hpp"
#include "diffcat/equality.hpp"
#include "diffcat/law_report.hpp"
#include "diffcat/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diffcat {

/// T(A) = A x A.
Space T_space(const Space& a);
/// T(f) = <f pi0, d[f]>.
Morphism T_map(const Model& model, const Morphism& f);

/// eta = <1, 0> : A -> T(A).
Morphism eta(const Model& model, const Space& a);
/// mu((x,y),(z,w)) = (x, y + z + eps(w)) : T(T(A)) -> T(A).
Morphism mu(const Model& model, const Space& a);
/// ((a,b),(c,d)) -> ((a,c),(b,d)) : T(A x B) -> T(A) x T(B).
Morphism phi(const Space& a, const Space& b);
/// ((a,c),(b,d)) -> ((a,b),(c,d)) : T(A) x T(B) -> T(A x B).
Morphism phi_inv(const Space& a, const Space& b);

/// A map A -> T(B) given by its two components.
struct KleisliMap {
  Morphism f0;
  Morphism f1;
  std::string name;

  KleisliMap(Morphism f0_, Morphism f1_);
  KleisliMap(Morphism f0_, Morphism f1_, std::string name_);

  const Space& dom() const noexcept { return f0.dom(); }
  const Space& cod() const noexcept { return f0.cod(); }
  /// <f0, f1> : A -> T(B).
  Morphism as_morphism() const;
};

/// Strategy used by the composition oracle unless told otherwise: eight
/// sampled points.
EqualityStrategy kleisli_oracle_default();

/// f# = <f0 pi0, f1 pi0 + d[f0] + eps(d[f1])> : T(A) -> T(B).
Morphism sharp(const Model& model, const KleisliMap& f);
/// The definitional form mu o T(<f0, f1>).
Morphism sharp_oracle(const Model& model, const KleisliMap& f);

/// <g0 f0, d[g0] <f0, f1> + g1 (f0 + eps f1)>. When `oracle` is set the
/// result is compared with mu o T(g) o f under it and OracleMismatch is
/// thrown on disagreement.
KleisliMap kleisli_compose(const Model& model, const KleisliMap& g, const KleisliMap& f,
                           const std::optional<EqualityStrategy>& oracle = kleisli_oracle_default());
/// mu o T(<g0,g1>) o <f0,f1>, split into components.
KleisliMap kleisli_compose_definitional(const Model& model, const KleisliMap& g,
                                        const KleisliMap& f);

KleisliMap kleisli_identity(const Space& a);
KleisliMap kleisli_pair(const KleisliMap& f, const KleisliMap& g);
/// <pi_i, 0> : A x B -> T(A) or T(B).
KleisliMap kleisli_proj(int i, const Space& a, const Space& b);
KleisliMap kleisli_add(const KleisliMap& f, const KleisliMap& g);
KleisliMap kleisli_zero(const Space& a, const Space& b);
KleisliMap kleisli_epsilon(const Model& model, const KleisliMap& f);
KleisliMap kleisli_derivative(const Model& model, const KleisliMap& f);

/// Adapter that runs the axiom schemas in the Kleisli category. The
/// generalized point i out of P = T(A)^k is <pi0 p_i, pi1 p_i>, so points
/// carry a nonzero tangent part.
class KleisliCategory {
public:
  using Map = KleisliMap;

  KleisliCategory(const Model& model, std::optional<EqualityStrategy> oracle)
      : model_(&model), oracle_(std::move(oracle)) {}

  std::string model_name() const { return model_->name() + "/kleisli"; }

  static const Space& dom(const Map& f) { return f.dom(); }
  static const Space& cod(const Map& f) { return f.cod(); }
  static const std::string& name(const Map& f) { return f.name; }

  Map id(const Space& a) const { return kleisli_identity(a); }
  Map p0(const Space& a, const Space& b) const { return kleisli_proj(0, a, b); }
  Map p1(const Space& a, const Space& b) const { return kleisli_proj(1, a, b); }
  Map comp(const Map& g, const Map& f) const { return kleisli_compose(*model_, g, f, oracle_); }
  Map pair(const Map& f, const Map& g) const { return kleisli_pair(f, g); }
  Map add(const Map& f, const Map& g) const { return kleisli_add(f, g); }
  Map zero(const Space& d, const Space& c) const { return kleisli_zero(d, c); }
  Map eps(const Map& f) const { return kleisli_epsilon(*model_, f); }
  Map d(const Map& f) const { return kleisli_derivative(*model_, f); }

  std::pair<Space, std::vector<Map>> points(const Space& a, int k) const;

  EqualityReport equal(const Map& lhs, const Map& rhs, const EqualityStrategy& strat) const;

private:
  const Model* model_;
  std::optional<EqualityStrategy> oracle_;
};

/// Unit laws on T(A) and associativity on T^3(A), one clause each.
LawReport check_monad_laws(const Model& model, const Space& a, const EqualityStrategy& strat);

/// Functoriality of T and naturality of eta and mu along f : A -> B.
LawReport check_naturality(const Model& model, const Morphism& f, const EqualityStrategy& strat);

/// T(f + g) = T(f) + T(g); T(l) = l x l for the linear map `linear`;
/// T(d[f]) = d[T(f)] o phi; T(eps f) = eps(T f); eps(mu) = mu o eps(1).
LawReport check_tangent_identities(const Model& model, const Morphism& f, const Morphism& g,
                                   const Morphism& linear, const EqualityStrategy& strat);

/// sharp(f) against mu o T(f).
LawReport check_sharp(const Model& model, const KleisliMap& f, const EqualityStrategy& strat);

/// Closed-form composition against mu o T(g) o f, without throwing.
LawReport check_kleisli_composition(const Model& model, const KleisliMap& g, const KleisliMap& f,
                                    const EqualityStrategy& strat);

/// The axiom suite (law_axiom_ids, plus CDC2-additivity when eps = 0) over
/// the given Kleisli subjects; subject i pairs with subject i+1.
std::vector<LawReport> check_kleisli_cdc(const Model& model,
                                         const std::vector<KleisliMap>& subjects,
                                         const EqualityStrategy& strat,
                                         std::optional<EqualityStrategy> oracle =
                                             kleisli_oracle_default());

/// Kleisli subjects <s_i, s_{i+1}> from base subjects, followed by the zero
/// map.
std::vector<KleisliMap> kleisli_subjects(const std::vector<Morphism>& base);

/// Linear in the Kleisli sense: d_T[f] = f o_T pi1_T. Equivalent to both
/// components being linear; both verdicts are returned.
struct KleisliLinearity {
  bool kleisli_linear = false;
  bool components_linear = false;
};
KleisliLinearity kleisli_linearity(const Model& model, const KleisliMap& f,
                                   const EqualityStrategy& strat);

struct AlgebraCandidate {
  Space space;
  Morphism nu; // T(space) -> space
};

/// The free algebra (T(A), mu_A).
AlgebraCandidate free_algebra(const Model& model, const Space& a);

/// nu o eta = 1, nu o T(nu) = nu o mu and linearity of nu. In findiff also
/// extracts e(y) = nu(0, y), checks that it is a homomorphism and that
/// nu = pi0 + e pi1.
std::vector<LawReport> check_linear_algebra(const Model& model, const AlgebraCandidate& cand,
                                            const EqualityStrategy& strat);

} // namespace diffcat
