#include "diffcat/axioms.hpp"

#include <array>

namespace diffcat {

namespace {

struct AxiomInfo {
  AxiomId id;
  const char* name;
  int arity;
};

constexpr std::array kAxioms{
    AxiomInfo{AxiomId::CdC0, "CdC0", 2},
    AxiomInfo{AxiomId::CdC1, "CdC1", 2},
    AxiomInfo{AxiomId::CdC2, "CdC2", 3},
    AxiomInfo{AxiomId::CdC3, "CdC3", 4},
    AxiomInfo{AxiomId::CdC4, "CdC4", 2},
    AxiomInfo{AxiomId::CdC5, "CdC5", 2},
    AxiomInfo{AxiomId::CdC6, "CdC6", 3},
    AxiomInfo{AxiomId::CdC7, "CdC7", 3},
    AxiomInfo{AxiomId::CdC6a, "CdC6a", 2},
    AxiomInfo{AxiomId::CdC7a, "CdC7a", 4},
    AxiomInfo{AxiomId::E1, "E1", 1},
    AxiomInfo{AxiomId::E2, "E2", 1},
    AxiomInfo{AxiomId::E3, "E3", 2},
    AxiomInfo{AxiomId::CDC2Additivity, "CDC2-additivity", 3},
    AxiomInfo{AxiomId::DEpsI, "DEps-i", 2},
    AxiomInfo{AxiomId::DEpsII, "DEps-ii", 3},
    AxiomInfo{AxiomId::DEpsIII, "DEps-iii", 3},
    AxiomInfo{AxiomId::Eq1Strong, "Eq1-strong", 3},
    AxiomInfo{AxiomId::Linearity, "Linearity", 2},
    AxiomInfo{AxiomId::EpsLinearity, "EpsLinearity", 2},
    AxiomInfo{AxiomId::EpsVanishing, "EpsVanishing", 1},
    AxiomInfo{AxiomId::F1, "F1", 0},
    AxiomInfo{AxiomId::F2, "F2", 4},
    AxiomInfo{AxiomId::F3, "F3", 2},
    AxiomInfo{AxiomId::F4, "F4", 0},
    AxiomInfo{AxiomId::OplusEps, "OplusEps", 2},
};

const AxiomInfo& info(AxiomId id) {
  for (const auto& a : kAxioms)
    if (a.id == id)
      return a;
  throw Error("unregistered axiom id");
}

} // namespace

std::string axiom_name(AxiomId id) { return info(id).name; }

int axiom_arity(AxiomId id) { return info(id).arity; }

AxiomId parse_axiom(std::string_view name) {
  for (const auto& a : kAxioms)
    if (name == a.name)
      return a.id;
  throw ParseError("unknown axiom '" + std::string(name) + "'");
}

const std::vector<AxiomId>& all_axiom_ids() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> out;
    for (const auto& a : kAxioms)
      out.push_back(a.id);
    return out;
  }();
  return ids;
}

const std::vector<AxiomId>& law_axiom_ids() {
  static const std::vector<AxiomId> ids{
      AxiomId::CdC0,  AxiomId::CdC1,  AxiomId::CdC2,   AxiomId::CdC3,    AxiomId::CdC4,
      AxiomId::CdC5,  AxiomId::CdC6,  AxiomId::CdC7,   AxiomId::CdC6a,   AxiomId::CdC7a,
      AxiomId::E1,    AxiomId::E2,    AxiomId::E3,     AxiomId::DEpsI,   AxiomId::DEpsII,
      AxiomId::DEpsIII, AxiomId::Eq1Strong, AxiomId::OplusEps,
  };
  return ids;
}

std::vector<AxiomId> parse_axiom_list(std::string_view text) {
  if (text == "all")
    return law_axiom_ids();
  std::vector<AxiomId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                          : comma - start);
    if (piece == "all") {
      const auto& all = law_axiom_ids();
      out.insert(out.end(), all.begin(), all.end());
    } else {
      out.push_back(parse_axiom(piece));
    }
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::pair<Space, std::vector<Morphism>> BaseCategory::points(const Space& a, int k) const {
  std::vector<Morphism> pts;
  const Space p = power(a, k);
  for (int i = 0; i < k; ++i)
    pts.push_back(power_proj(a, k, i));
  return {p, pts};
}

} // namespace diffcat
