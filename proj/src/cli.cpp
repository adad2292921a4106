#include "diffcat/cli.hpp"

#include "diffcat/axioms.hpp"
#include "diffcat/errors.hpp"
#include "diffcat/kernel.hpp"
#include "diffcat/lambda_closed.hpp"
#include "diffcat/rng.hpp"
#include "diffcat/subjects.hpp"
#include "diffcat/tangent.hpp"
#include "diffcat/term.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace diffcat {

namespace {

using nlohmann::json;

struct Options {
  std::string model = "findiff";
  std::string space;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::size_t subjects = 20;
  std::size_t samples = 256;
  std::uint64_t bound = kDefaultEnumerationBound;
  std::string axioms = "all";
  std::string primitives;
  // eval / derive
  std::string term;
  std::string at;
  int order = 1;
  // algebra-check
  std::string nu;
  // lambda-check
  int max_size = 4;
};

/// Raised for malformed invocations that CLI11 cannot see (bad files, bad
/// option values); reported with exit code 2.
struct UsageError : Error {
  using Error::Error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Element json_element(const Space& s, const json& v) {
  if (v.is_string())
    return parse_element(s, v.get<std::string>());
  if (v.is_number())
    return parse_element(s, v.dump());
  throw UsageError("table entries must be numbers or strings, got " + v.dump());
}

std::vector<Element> json_table(const Space& dom, const Space& cod, const json& entries) {
  const auto card = dom.cardinality();
  if (!entries.is_array() || !card || entries.size() != *card)
    throw UsageError("expected a table of " + (card ? std::to_string(*card) : std::string("?")) +
                     " entries over " + dom.to_string());
  std::vector<Element> out;
  for (const auto& v : entries)
    out.push_back(json_element(cod, v));
  return out;
}

/// {"space": "Z7", "table": [...], "name": "f"} registered as a primitive
/// defined at that space only.
void load_primitives(Model& model, const std::string& path) {
  const json j = read_json(path);
  const auto load_one = [&](const json& p) {
    if (!p.contains("space") || !p.contains("table"))
      throw UsageError(path + ": primitive needs \"space\" and \"table\"");
    const Space s = parse_space(p["space"].get<std::string>());
    const std::string name = p.value("name", std::string("table"));
    const Morphism f = from_table(s, s, json_table(s, s, p["table"]), name);
    model.register_primitive(name, [f, s](const Space& at) {
      if (!(at == s))
        throw ModelRestriction(f.name() + " is only defined at " + s.to_string());
      return f;
    });
  };
  if (j.is_array())
    for (const auto& p : j)
      load_one(p);
  else
    load_one(j);
}

struct Context {
  std::unique_ptr<Model> model;
  Space space;
  EqualityStrategy strat;
};

Context make_context(const Options& o) {
  Context c{make_model(o.model), Space(), {}};
  if (!o.primitives.empty())
    load_primitives(*c.model, o.primitives);
  c.space = o.space.empty() ? c.model->default_space() : parse_space(o.space);
  c.model->check_space(c.space);
  c.strat = EqualityStrategy::automatic(o.samples, o.seed, o.bound);
  return c;
}

std::vector<Morphism> default_subjects(const Context& c, const Options& o) {
  std::vector<Morphism> out = primitive_subjects(*c.model, c.space);
  const auto more = generate_subjects(*c.model, c.space, o.subjects, o.seed);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

void emit(const Options& o, const std::string& command, const std::string& model,
          const std::vector<LawReport>& results, std::uint64_t elapsed_ms, std::ostream& out) {
  if (o.format == "table") {
    for (const auto& r : results) {
      out << std::left << std::setw(18) << r.axiom << " " << std::setw(8) << to_string(r.status)
          << " checked=" << r.checked << " violations=" << r.violations << "  " << r.subject;
      if (r.counterexample)
        out << "\n    counterexample" << (r.clause.empty() ? "" : " [" + r.clause + "]") << ": at "
            << r.counterexample->point << " lhs=" << r.counterexample->lhs
            << " rhs=" << r.counterexample->rhs;
      else if (r.status == Verdict::Unknown && !r.clause.empty())
        out << "\n    note: " << r.clause;
      out << "\n";
    }
    out << "violations_total=" << total_violations(results) << " elapsed_ms=" << elapsed_ms
        << "\n";
    return;
  }
  json j;
  j["version"] = 1;
  j["command"] = command;
  j["model"] = model;
  j["seed"] = o.seed;
  j["results"] = json::array();
  for (const auto& r : results)
    j["results"].push_back(r.to_json());
  j["violations_total"] = total_violations(results);
  j["elapsed_ms"] = elapsed_ms;
  out << j.dump(2) << "\n";
}

int verdict_code(const std::vector<LawReport>& results) {
  for (const auto& r : results)
    if (r.status == Verdict::Fail || r.violations > 0)
      return 1;
  return 0;
}

std::vector<LawReport> run_check(const Options& o) {
  const Context c = make_context(o);
  return check_axioms(*c.model, parse_axiom_list(o.axioms), default_subjects(c, o), c.strat);
}

std::vector<LawReport> run_monad_laws(const Options& o) {
  const Context c = make_context(o);
  std::vector<LawReport> out{check_monad_laws(*c.model, c.space, c.strat)};
  const auto subjects = default_subjects(c, o);
  const Morphism linear = c.model->admit(scale(2, identity(c.space)).renamed("dbl"));
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    const Morphism& f = subjects[i];
    const Morphism& g = subjects[(i + 1) % subjects.size()];
    const EqualityStrategy sub = c.strat.subseeded(i);
    out.push_back(check_naturality(*c.model, f, sub));
    out.push_back(check_tangent_identities(*c.model, f, g, linear, sub));
  }
  return out;
}

std::vector<LawReport> run_kleisli(const Options& o) {
  const Context c = make_context(o);
  const auto ks = kleisli_subjects(default_subjects(c, o));
  std::vector<LawReport> out = check_kleisli_cdc(*c.model, ks, c.strat);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const EqualityStrategy sub = c.strat.subseeded(i);
    out.push_back(check_kleisli_composition(*c.model, ks[(i + 1) % ks.size()], ks[i], sub));
    out.push_back(check_sharp(*c.model, ks[i], sub));
  }
  return out;
}

std::vector<LawReport> run_algebra(const Options& o) {
  Context c = make_context(o);
  AlgebraCandidate cand = free_algebra(*c.model, c.space);
  if (!o.nu.empty()) {
    const json j = read_json(o.nu);
    if (!j.contains("space") || !j.contains("nu"))
      throw UsageError(o.nu + ": algebra needs \"space\" and \"nu\"");
    const Space a = parse_space(j["space"].get<std::string>());
    c.model->check_space(a);
    const Space ta = T_space(a);
    cand = {a, c.model->admit(from_table(ta, a, json_table(ta, a, j["nu"]),
                                         j.value("name", std::string("nu"))))};
  }
  return check_linear_algebra(*c.model, cand, c.strat);
}

std::vector<LawReport> run_lambda(const Options& o) {
  if (ModelTag::parse(o.model).kind != ModelTag::Kind::FinDiff)
    throw UsageError("lambda-check is defined for the findiff model only");
  if (o.max_size < 2)
    throw UsageError("--max-size must be at least 2");
  std::vector<Space> spaces;
  for (int n = 2; n <= o.max_size; ++n)
    spaces.push_back(Space::cyclic(n));
  for (int a = 2; a <= o.max_size; ++a)
    for (int b = 2; a * b <= o.max_size; ++b)
      spaces.push_back(Space::product(Space::cyclic(a), Space::cyclic(b)));
  const EqualityStrategy strat = EqualityStrategy::automatic(o.samples, o.seed, o.bound);
  std::vector<LawReport> out;
  std::vector<Morphism> curried;
  for (std::size_t i = 0; i < o.subjects; ++i) {
    Rng rng(derive_seed(o.seed, i));
    const auto pick = [&]() -> const Space& {
      return spaces[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(spaces.size()) - 1))];
    };
    const Space a = pick(), b = pick(), cc = pick();
    const Morphism f = random_table(Space::product(a, b), cc, rng, "f" + std::to_string(i));
    const Morphism g = random_table(a, b, rng, "g" + std::to_string(i));
    const EqualityStrategy sub = strat.subseeded(i);
    out.push_back(check_dlambda_axioms(f, sub));
    out.push_back(check_ev_derivative_identities(f, g, sub));
    out.push_back(check_curry_roundtrip(f, sub));
    curried.push_back(f);
  }
  if (!curried.empty())
    out.push_back(check_closed_left_additive(curried, strat));
  return out;
}

std::vector<LawReport> run_flatness(const Options& o) {
  const Context c = make_context(o);
  return check_flatness(*c.model, c.space, c.strat);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "findiff | smooth | module:r=<int> | streams:k=<int>");
  sub->add_option("--space", o.space, "Z<n>, Int[lo,hi], R^d, Stream(s,K), (s x s), 1");
  sub->add_option("--seed", o.seed, "base seed (DIFFKIT_SEED overrides)");
  sub->add_option("--format", o.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--subjects", o.subjects, "number of random subjects");
  sub->add_option("--samples", o.samples, "sample count when not exhaustive");
  sub->add_option("--bound", o.bound, "largest point set checked exhaustively");
  sub->add_option("--primitives", o.primitives, "JSON table primitive(s) to register");
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args)
    s += (s.empty() ? "" : " ") + a;
  return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Law checker for Cartesian difference categories", "diffkit"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "interpret a term at a point");
  eval->add_option("--term", o.term, "combinator term")->required();
  eval->add_option("--at", o.at, "point in the term's domain")->required();
  auto* derive = app.add_subcommand("derive", "symbolic derivative of a term");
  derive->add_option("--term", o.term, "combinator term")->required();
  derive->add_option("--order", o.order, "number of derivatives")->check(CLI::Range(0, 16));
  auto* check = app.add_subcommand("check", "axiom suite over subjects");
  check->add_option("--axioms", o.axioms, "all, or a comma separated list");
  auto* monad = app.add_subcommand("monad-laws", "tangent monad laws and identities");
  auto* kleisli = app.add_subcommand("kleisli-check", "Kleisli difference structure");
  auto* algebra = app.add_subcommand("algebra-check", "linear T-algebra check");
  algebra->add_option("--nu", o.nu, "JSON {\"space\", \"nu\"}; default is the free algebra");
  auto* lambda = app.add_subcommand("lambda-check", "closed structure over finite groups");
  lambda->add_option("--max-size", o.max_size, "largest space size");
  auto* flat = app.add_subcommand("flatness", "flatness conditions at a space");
  for (auto* sub : {eval, derive, check, monad, kleisli, algebra, lambda, flat})
    add_common(sub, o);

  std::vector<const char*> argv{"diffkit"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("DIFFKIT_SEED"); env && *env) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "DIFFKIT_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string command = join(args);
  try {
    if (eval->parsed()) {
      const Context c = make_context(o);
      const Term t = parse_term(o.term);
      const Morphism f = interpret(t, *c.model, c.space);
      out << format_element(f.cod(), f(parse_element(f.dom(), o.at))) << "\n";
      return 0;
    }
    if (derive->parsed()) {
      const Context c = make_context(o);
      const Term t = parse_term(o.term);
      typecheck(t, c.space);
      out << print_term(symbolic_derive(t, o.order)) << "\n";
      return 0;
    }
    std::vector<LawReport> results;
    std::string sub_name;
    if (check->parsed())
      results = run_check(o);
    else if (monad->parsed())
      results = run_monad_laws(o);
    else if (kleisli->parsed())
      results = run_kleisli(o);
    else if (algebra->parsed())
      results = run_algebra(o);
    else if (lambda->parsed())
      results = run_lambda(o);
    else
      results = run_flatness(o);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    const std::string model_name =
        lambda->parsed() ? std::string("findiff") : make_model(o.model)->name();
    emit(o, command, model_name, results, static_cast<std::uint64_t>(elapsed), out);
    return verdict_code(results);
  } catch (const Error& e) {
    err << "diffkit: " << e.what() << "\n";
    return 2;
  }
}

} // namespace diffcat
