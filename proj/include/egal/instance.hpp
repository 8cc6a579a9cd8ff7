#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "egal/constraints.hpp"
#include "egal/core.hpp"

namespace egal {

/// The on-disk scenario: issues, at most one of constraint / explicit domain,
/// and a (possibly empty) profile.
struct Instance {
  Agenda agenda;
  std::optional<Domain> explicit_domain;
  Profile profile;

  /// The explicit domain, or the enumeration of the agenda's constraint
  /// (every judgment when there is none). Checks profile admissibility.
  Domain domain(int cap = kDefaultEnumCap) const;
};

/// Parses the JSON form:
///   {"issues": [...], "constraint": "p & q <-> r", "domain": [...], "profile": [...]}
/// Throws SyntaxError for malformed JSON and InvalidArgument/DimensionError
/// for structurally invalid content.
Instance parse_instance(std::string_view json_text);

/// Pretty-printed JSON with keys in the order issues, constraint, domain, profile.
std::string to_json(const Instance& inst);

/// Issue cap honouring the EGAL_ENUM_CAP environment variable.
int enumeration_cap_from_env();

}  // namespace egal
