#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "egal/core.hpp"

namespace egal {

/// An explicitly tabulated anonymous rule.
class TableRule {
 public:
  /// DistinctSet keys on which judgments were submitted, ignoring how often;
  /// Multiset keys on the sorted profile.
  enum class Keying { DistinctSet, Multiset };

  explicit TableRule(Keying keying = Keying::DistinctSet) : keying_(keying) {}

  Keying keying() const noexcept { return keying_; }
  void set(const std::vector<Judgment>& submitted, Outcome outcome);
  /// Throws MissingTableEntry.
  const Outcome& lookup(const Profile& p) const;
  std::size_t size() const noexcept { return entries_.size(); }

  std::vector<Judgment> key_of(const std::vector<Judgment>& submitted) const;

 private:
  Keying keying_;
  std::map<std::vector<Judgment>, Outcome> entries_;
};

class RuleSpec {
 public:
  enum class Kind { MaxHam, MaxEq, MaxEqThenMaxHam, Table };

  static RuleSpec max_ham() { return RuleSpec(Kind::MaxHam); }
  static RuleSpec max_eq() { return RuleSpec(Kind::MaxEq); }
  static RuleSpec max_eq_lex() { return RuleSpec(Kind::MaxEqThenMaxHam); }
  static RuleSpec table(TableRule t);

  /// "maxham", "maxeq", "maxeq-lex". Throws InvalidArgument.
  static RuleSpec from_name(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  const TableRule& table_rule() const;
  std::string name() const;

 private:
  explicit RuleSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::shared_ptr<const TableRule> table_;
};

/// Distances of one candidate to every agent, with the derived aggregates.
struct ScoreBreakdown {
  Judgment judgment;
  std::vector<int> distances;
  int maxdist = 0;
  int mindist = 0;
  int inequity = 0;
};

ScoreBreakdown score(const Profile& p, const Judgment& j);
/// One row per domain member, in canonical order.
std::vector<ScoreBreakdown> breakdown(const Domain& d, const Profile& p);

int maxdist(const Profile& p, const Judgment& j);
int inequity(const Profile& p, const Judgment& j);

Outcome max_ham(const Domain& d, const Profile& p);
Outcome max_eq(const Domain& d, const Profile& p);
/// Among MaxEq winners, those with the smallest maxdist.
Outcome max_eq_lex(const Domain& d, const Profile& p);

Outcome apply_rule(const RuleSpec& r, const Domain& d, const Profile& p);

/// Whether some domain judgment is equidistant from every agent.
bool exists_equidistant(const Domain& d, const Profile& p);

/// Smallest inequity over the domain.
int min_inequity(const Domain& d, const Profile& p);

}  // namespace egal
