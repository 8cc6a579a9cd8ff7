#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/core.hpp"

namespace egal::asp {

/// What an encoding needs to know about a scenario. Exactly one source of
/// admissibility is used: the explicit domain when given, otherwise the
/// agenda's constraint (or none, for a free agenda).
struct Scenario {
  Agenda agenda;
  std::optional<Domain> explicit_domain;
  Profile profile;
};

enum class Objective { MaxEq, MaxEqThenMaxHam };

/// An emitted program, kept in sections so callers can pick parts.
struct Program {
  std::string facts;
  /// Guess of the collective judgment plus admissibility constraints.
  std::string generate;
  /// Fixed rule template.
  std::string rules;
  /// Constraint to add after meta-transformation (manipulation programs only).
  std::string post_transform;
  /// Human-readable notes, emitted as leading comments.
  std::vector<std::string> notes;

  std::string text() const;
};

/// dist/maxdist/mindist/inequity and the @30 (and optionally @20) statements.
std::string outcome_rules_template(Objective objective);

/// ASP constant for an issue label ("p" stays "p", "P" becomes "i_P").
/// Throws InvalidArgument for labels that cannot be mapped.
std::string issue_constant(std::string_view label);

Program emit_outcome_program(const Scenario& s, Objective objective = Objective::MaxEq);

/// Scaffold for deciding whether agent `manipulator` (1-based) can
/// manipulate, in the meta-optimisation dialect (_criteria/_optimize).
/// Voters are renumbered so that the manipulator is voter 1.
Program emit_manipulation_program(const Scenario& s, int manipulator,
                                  Objective objective = Objective::MaxEq);

/// Decodes the collective judgments (js(col,...) atoms) of the optimal models
/// in solver output using the "Answer: k" / "Optimization: ..." /
/// "OPTIMUM FOUND" convention. Models are all optimal when the output has no
/// optimisation lines. Returns distinct judgments in canonical order.
/// Throws SyntaxError on malformed output or a missing optimum marker.
std::vector<Judgment> parse_answer_sets(std::string_view solver_output, const Agenda& agenda);

/// Runs `solver_path --opt-mode=optN 0 <file>` on `program` and returns its
/// standard output. Throws Error when the process cannot be started.
std::string run_solver(const std::string& solver_path, const std::string& program);

}  // namespace egal::asp
