#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/axioms.hpp"
#include "egal/finding.hpp"
#include "egal/preferences.hpp"
#include "egal/rules.hpp"

namespace egal {

/// First untruthful report J' in d (canonical order) with
/// F(Pf_{-i}, J') strictly preferred to F(Pf) by agent i.
std::optional<ManipulationFinding> find_manipulation(const RuleSpec& rule, ExtensionKind ext,
                                                     const Domain& d, const Profile& p, int i);

/// Every successful untruthful report, in canonical order.
std::vector<ManipulationFinding> find_all_manipulations(const RuleSpec& rule, ExtensionKind ext,
                                                        const Domain& d, const Profile& p, int i);

/// F(Pf_{-i}) strictly preferred to F(Pf). Requires n >= 2.
std::optional<ManipulationFinding> find_noshow(const RuleSpec& rule, ExtensionKind ext,
                                               const Domain& d, const Profile& p, int i);

struct AntipodalResult {
  /// False when the manipulator's antipodal judgment is not admissible.
  bool applicable = true;
  std::optional<ManipulationFinding> finding;
};

/// F(Pf_{-i}, antipodal(J_i)) strictly preferred to F(Pf).
AntipodalResult find_antipodal(const RuleSpec& rule, ExtensionKind ext, const Domain& d,
                               const Profile& p, int i);

enum class RuleProperty { Strategyproofness, Participation, AntipodalStrategyproofness };

/// "strategyproofness" | "participation" | "antipodal-sp".
RuleProperty rule_property_from_name(std::string_view name);
std::string to_string(RuleProperty prop);

/// Scans every profile and agent for the matching kind of manipulation.
AxiomReport check_rule(RuleProperty prop, const RuleSpec& rule, ExtensionKind ext,
                       const Domain& d, const SearchOptions& opts = {});

/// Status of "participation implies antipodal strategyproofness" on the
/// searched space: a counterexample means the rule passes the participation
/// scan yet admits an antipodal manipulation.
AxiomReport check_part_implies_antipodal(const RuleSpec& rule, const Domain& d,
                                         const SearchOptions& opts = {},
                                         ExtensionKind ext = ExtensionKind::Decisive);

/// Recomputes both outcomes from scratch and re-evaluates the set preference.
bool finding_reverifies(const ManipulationFinding& f, const RuleSpec& rule, ExtensionKind ext,
                        const Domain& d);

}  // namespace egal
