#include "egal/rules.hpp"

#include <algorithm>
#include <climits>

namespace egal {

// --- TableRule / RuleSpec ---------------------------------------------------

std::vector<Judgment> TableRule::key_of(const std::vector<Judgment>& submitted) const {
  std::vector<Judgment> key = submitted;
  std::sort(key.begin(), key.end());
  if (keying_ == Keying::DistinctSet) key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

void TableRule::set(const std::vector<Judgment>& submitted, Outcome outcome) {
  if (submitted.empty()) throw InvalidArgument("table key must name at least one judgment");
  auto key = key_of(submitted);
  entries_.insert_or_assign(std::move(key), std::move(outcome));
}

const Outcome& TableRule::lookup(const Profile& p) const {
  auto it = entries_.find(key_of(p.judgments()));
  if (it == entries_.end()) {
    throw MissingTableEntry("table rule has no entry for profile " + p.str());
  }
  return it->second;
}

RuleSpec RuleSpec::table(TableRule t) {
  RuleSpec r(Kind::Table);
  r.table_ = std::make_shared<const TableRule>(std::move(t));
  return r;
}

RuleSpec RuleSpec::from_name(std::string_view name) {
  if (name == "maxham") return max_ham();
  if (name == "maxeq") return max_eq();
  if (name == "maxeq-lex") return max_eq_lex();
  throw InvalidArgument("unknown rule '" + std::string(name) +
                        "' (expected maxham, maxeq or maxeq-lex)");
}

const TableRule& RuleSpec::table_rule() const {
  if (!table_) throw InvalidArgument("rule is not a table rule");
  return *table_;
}

std::string RuleSpec::name() const {
  switch (kind_) {
    case Kind::MaxHam: return "maxham";
    case Kind::MaxEq: return "maxeq";
    case Kind::MaxEqThenMaxHam: return "maxeq-lex";
    case Kind::Table: return "table";
  }
  return "?";
}

// --- scores -----------------------------------------------------------------

namespace {

void require_agents(const Profile& p) {
  if (p.empty()) throw InvalidArgument("profile must contain at least one agent");
}

/// Canonically ordered argmin of `key` over the domain.
template <typename Key>
Outcome argmin(const Domain& d, const Profile& p, Key key) {
  require_agents(p);
  d.check_profile(p);
  std::vector<Judgment> best;
  auto best_value = key(d.members().front());
  for (const auto& j : d) {
    const auto value = key(j);
    if (value < best_value) {
      best_value = value;
      best.clear();
    }
    if (value == best_value) best.push_back(j);
  }
  return Outcome(std::move(best));
}

}  // namespace

ScoreBreakdown score(const Profile& p, const Judgment& j) {
  require_agents(p);
  ScoreBreakdown s{j, {}, 0, INT_MAX, 0};
  s.distances.reserve(static_cast<std::size_t>(p.size()));
  for (const auto& ji : p) {
    const int h = hamming(ji, j);
    s.distances.push_back(h);
    s.maxdist = std::max(s.maxdist, h);
    s.mindist = std::min(s.mindist, h);
  }
  s.inequity = s.maxdist - s.mindist;
  return s;
}

std::vector<ScoreBreakdown> breakdown(const Domain& d, const Profile& p) {
  d.check_profile(p);
  std::vector<ScoreBreakdown> rows;
  rows.reserve(static_cast<std::size_t>(d.size()));
  for (const auto& j : d) rows.push_back(score(p, j));
  return rows;
}

int maxdist(const Profile& p, const Judgment& j) {
  require_agents(p);
  int best = 0;
  for (const auto& ji : p) best = std::max(best, hamming(ji, j));
  return best;
}

int inequity(const Profile& p, const Judgment& j) {
  const auto s = score(p, j);
  return s.inequity;
}

Outcome max_ham(const Domain& d, const Profile& p) {
  return argmin(d, p, [&](const Judgment& j) { return maxdist(p, j); });
}

Outcome max_eq(const Domain& d, const Profile& p) {
  return argmin(d, p, [&](const Judgment& j) { return inequity(p, j); });
}

Outcome max_eq_lex(const Domain& d, const Profile& p) {
  return argmin(d, p, [&](const Judgment& j) {
    const auto s = score(p, j);
    return std::pair{s.inequity, s.maxdist};
  });
}

Outcome apply_rule(const RuleSpec& r, const Domain& d, const Profile& p) {
  switch (r.kind()) {
    case RuleSpec::Kind::MaxHam: return max_ham(d, p);
    case RuleSpec::Kind::MaxEq: return max_eq(d, p);
    case RuleSpec::Kind::MaxEqThenMaxHam: return max_eq_lex(d, p);
    case RuleSpec::Kind::Table: {
      require_agents(p);
      const Outcome& out = r.table_rule().lookup(p);
      for (const auto& j : out) {
        if (!d.contains(j)) {
          throw InvalidArgument("table outcome " + j.str() + " lies outside the domain");
        }
      }
      return out;
    }
  }
  throw InvalidArgument("unhandled rule kind");
}

int min_inequity(const Domain& d, const Profile& p) {
  require_agents(p);
  d.check_profile(p);
  int best = INT_MAX;
  for (const auto& j : d) {
    best = std::min(best, inequity(p, j));
    if (best == 0) break;
  }
  return best;
}

bool exists_equidistant(const Domain& d, const Profile& p) { return min_inequity(d, p) == 0; }

}  // namespace egal
