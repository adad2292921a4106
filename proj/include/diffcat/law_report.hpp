#pragma once

#include "diffcat/equality.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diffcat {

enum class Verdict { Pass, Fail, Unknown };

std::string to_string(Verdict v);

/// Outcome of checking one law (possibly several equations) on one subject.
struct LawReport {
  std::string axiom;
  std::string model;
  std::string subject;
  std::string strategy;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Which equation of the law failed first, when there are several.
  std::string clause;
  std::optional<Counterexample> counterexample;
  std::uint64_t seed = 0;
  Verdict status = Verdict::Pass;

  bool passed() const noexcept { return status == Verdict::Pass; }

  /// Folds one equation's outcome into the report.
  void absorb(const EqualityReport& eq, const std::string& clause_name = {});

  nlohmann::json to_json() const;
};

std::uint64_t total_violations(const std::vector<LawReport>& reports);
bool all_passed(const std::vector<LawReport>& reports);

} // namespace diffcat
