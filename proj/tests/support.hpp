#pragma once

#include "diffcat/element.hpp"
#include "diffcat/law_report.hpp"
#include "diffcat/morphism.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace diffcat::testing {

inline Element el(const Space& s, std::string_view text) { return parse_element(s, text); }

/// f evaluated at a point given in text, rendered in f's codomain.
inline std::string at(const Morphism& f, std::string_view x) {
  return format_element(f.cod(), f(parse_element(f.dom(), x)));
}

inline Space Z(std::int64_t n) { return Space::cyclic(n); }
inline Space prod(const Space& a, const Space& b) { return Space::product(a, b); }

inline std::string failures(const std::vector<LawReport>& reports) {
  std::string out;
  for (const auto& r : reports)
    if (!r.passed())
      out += r.to_json().dump() + "\n";
  return out;
}

} // namespace diffcat::testing
