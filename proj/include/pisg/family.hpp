#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pisg/io.hpp"
#include "pisg/ring.hpp"

namespace pisg {

struct FactorTemplate {
  Family family = Family::Field;
  int param = 0;
  std::string label() const;  // "F", "chain(2)", "twogen_flat(2)", ...
  IdealLattice lattice() const { return make_builtin(family, param); }
};

struct FamilyConfig {
  std::vector<FactorTemplate> templates;
  int n_max = 4;
  int max_vertices = 30;
  std::uint64_t genus_budget = 20'000'000;
  std::uint64_t crosscap_budget = 20'000'000;
  std::uint64_t subdivision_budget = 20'000'000;
  unsigned workers = 1;
};

/// Throws Error(BadInput) when n_max < 2, the vertex cap is below 2, a budget
/// is zero or no template is given.
void validate_config(const FamilyConfig& cfg);

/// {"templates": ["field", "chain(1..3)", "twogen_flat(2)", {"family":
/// "twogen_xy", "q": 2}], "n_max": 4, "max_vertices": 30, "budgets":
/// {"genus": N, "crosscap": N, "subdivision": N}, "workers": 1}
FamilyConfig config_from_json(const json& j);
json config_to_json(const FamilyConfig& cfg);

struct FamilyMember {
  RingSpec ring;
  std::string label;  // "chain(2) x chain(1)"
  int vertices = 0;
};

/// All multisets of templates with 2 <= n <= n_max factors and at most
/// max_vertices nontrivial ideals. Factors inside a ring are listed in reverse
/// template order, rings by factor count and then lexicographically; rings with
/// the same factor multiset up to lattice isomorphism appear once.
std::vector<FamilyMember> enumerate_family(const FamilyConfig& cfg);

}  // namespace pisg
