#pragma once

#include <optional>
#include <string>
#include <utility>

#include "egal/core.hpp"

namespace egal {

enum class ManipulationKind { General, NoShow, Antipodal };

/// "general" | "no-show" | "antipodal". Throws InvalidArgument.
ManipulationKind manipulation_kind_from_name(std::string_view name);
std::string to_string(ManipulationKind kind);

/// A successful deviation by one agent. `profile` is the truthful profile;
/// `after` is the outcome once the manipulator misreports or abstains.
struct ManipulationFinding {
  ManipulationKind kind = ManipulationKind::General;
  Profile profile;
  int manipulator = 0;
  /// Absent for no-show.
  std::optional<Judgment> untruthful;
  Outcome before{Judgment{}};
  Outcome after{Judgment{}};
  /// (J in after, J' in before) with J strictly closer to the manipulator's
  /// truthful judgment and the pair not shared by both outcomes.
  std::optional<std::pair<Judgment, Judgment>> witness;

  /// The profile the manipulator induces.
  Profile deviated_profile() const;
  std::string str() const;
};

}  // namespace egal
