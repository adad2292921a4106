#include "diffcat/law_report.hpp"

namespace diffcat {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Unknown:
    return "unknown";
  }
  return "unknown";
}

void LawReport::absorb(const EqualityReport& eq, const std::string& clause_name) {
  checked += eq.checked;
  violations += eq.violations;
  if (eq.counterexample && !counterexample) {
    counterexample = eq.counterexample;
    clause = clause_name;
  }
  if (violations > 0)
    status = Verdict::Fail;
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json j = {
      {"axiom", axiom},     {"model", model},           {"subject", subject},
      {"strategy", strategy}, {"checked", checked},     {"violations", violations},
      {"seed", seed},       {"status", to_string(status)},
  };
  if (counterexample) {
    j["counterexample"] = {{"point", counterexample->point},
                           {"lhs", counterexample->lhs},
                           {"rhs", counterexample->rhs}};
    if (!clause.empty())
      j["counterexample"]["clause"] = clause;
  } else if (status == Verdict::Unknown && !clause.empty()) {
    j["note"] = clause;
  }
  return j;
}

std::uint64_t total_violations(const std::vector<LawReport>& reports) {
  std::uint64_t n = 0;
  for (const auto& r : reports)
    n += r.violations;
  return n;
}

bool all_passed(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed())
      return false;
  return true;
}

} // namespace diffcat
