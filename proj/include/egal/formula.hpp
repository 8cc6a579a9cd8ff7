#pragma once

#include <string>
#include <vector>

namespace egal {

/// Propositional formula over issue labels. Binary connectives always hold
/// exactly two arguments; negation holds one; constants and variables none.
struct Formula {
  enum class Kind { True, False, Var, Not, And, Or, Implies, Iff };

  Kind kind = Kind::True;
  std::string var;
  std::vector<Formula> args;

  static Formula constant(bool value);
  static Formula variable(std::string label);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula biconditional(Formula a, Formula b);

  /// Distinct variable labels in first-occurrence order.
  std::vector<std::string> variables() const;

  bool operator==(const Formula&) const = default;
};

}  // namespace egal
