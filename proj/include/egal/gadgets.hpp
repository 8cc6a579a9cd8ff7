#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/constraints.hpp"
#include "egal/core.hpp"

namespace egal {

/// A 3CNF formula over variables 1..num_vars. Literals are signed variable
/// numbers (DIMACS convention); every clause has exactly three of them.
struct ThreeCnf {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  /// Throws InvalidArgument on a clause with an out-of-range or zero literal,
  /// a repeated variable, or complementary literals.
  void validate() const;
};

/// Reads "p cnf n b" followed by zero-terminated clauses; "c" lines are
/// comments. Throws SyntaxError, or InvalidArgument for non-3CNF input.
ThreeCnf parse_dimacs(std::string_view text);
std::string to_dimacs(const ThreeCnf& f);

/// Where a gadget profile row comes from.
struct RowOrigin {
  enum class Kind { Unit, Complement, Clause };
  Kind kind = Kind::Unit;
  /// Variable (1-based) for Unit/Complement rows, clause (1-based) otherwise.
  int index = 0;
  /// 1, 2 or 3 for clause rows.
  int member = 0;

  std::string str() const;
};

/// Free agenda y1..yn, yp1..ypn, z1..z5 with the hardness profile.
struct GadgetInstance {
  Agenda agenda;
  Profile profile;
  std::vector<RowOrigin> provenance;
};

GadgetInstance build_gadget(const ThreeCnf& f);

/// Whether some assignment satisfies exactly one literal per clause.
bool one_in_three_oracle(const ThreeCnf& f, int cap = kDefaultEnumCap);
/// The first such assignment (bit v-1 = value of x_v), by brute force.
std::optional<std::vector<bool>> find_one_in_three(const ThreeCnf& f, int cap = kDefaultEnumCap);

/// The judgment that encodes `assignment` in the y/y' blocks with
/// z-block 00001; equidistant from all rows when the assignment is 1-in-3.
Judgment assignment_judgment(const ThreeCnf& f, const std::vector<bool>& assignment);

struct GadgetReport {
  int num_issues = 0;
  int profile_size = 0;
  int min_inequity = 0;
  Judgment minimiser;
  bool equidistant_exists = false;
  bool one_in_three = false;
  /// Distances from the assignment judgment to every row, when 1-in-3.
  std::optional<std::vector<int>> assignment_distances;
  /// Every checked property of the construction held.
  bool consistent = false;
  std::vector<std::string> failures;

  std::string str() const;
};

/// Scans all 2^(2n+5) judgments. The "min inequity = 2" bound for
/// unsatisfiable formulas is only asserted when `isolation_precondition`
/// is true, since it depends on a property the caller vouches for.
GadgetReport verify_gadget(const ThreeCnf& f, bool isolation_precondition = false,
                           int cap = kDefaultEnumCap);

}  // namespace egal
