#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "egal/core.hpp"
#include "egal/formula.hpp"

namespace egal {

/// Default upper bound on the number of issues `enumerate_domain` will scan.
inline constexpr int kDefaultEnumCap = 20;

/// Parses the constraint grammar:
///
///   iff     := implies ( "<->" implies )*        (left-assoc)
///   implies := or ( "->" implies )?              (right-assoc)
///   or      := and ( "|" and )*
///   and     := unary ( "&" unary )*
///   unary   := "!" unary | atom
///   atom    := IDENT | "true" | "false" | "(" iff ")"
///
/// IDENT is [A-Za-z][A-Za-z0-9_]*. Throws SyntaxError with the byte offset.
Formula parse_formula(std::string_view text);

/// Prints in the same grammar; binary subterms are parenthesised.
std::string to_string(const Formula& f);

/// Truth value of `f` when issue k of `agenda` takes bit k of `j`.
/// Throws InvalidArgument on a variable the agenda does not declare.
bool evaluate(const Formula& f, const Judgment& j, const Agenda& agenda);

/// A formula with labels resolved to issue positions, for repeated evaluation.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Agenda& agenda);
  bool operator()(const Judgment& j) const;

 private:
  struct Node {
    Formula::Kind kind;
    int issue = -1;
    int lhs = -1;
    int rhs = -1;
  };
  int compile(const Formula& f, const Agenda& agenda);
  bool eval(int node, const Judgment& j) const;

  std::vector<Node> nodes_;
  int root_ = -1;
};

/// J(agenda): every judgment satisfying the constraint, ascending.
/// Throws CapacityError when the agenda exceeds `cap` issues and
/// InconsistentConstraint when nothing satisfies it.
Domain enumerate_domain(const Agenda& agenda, int cap = kDefaultEnumCap);

}  // namespace egal
