#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/core.hpp"
#include "egal/finding.hpp"
#include "egal/rules.hpp"

namespace egal {

/// Bounds of an exhaustive profile search.
struct SearchOptions {
  int n_max = 3;
  int n_min = 1;
  /// Enumerate ordered profiles instead of multisets. Only matters for rules
  /// that are not anonymous.
  bool ordered = false;
  /// Upper bound on the number of profiles visited.
  std::size_t budget = 200'000;
};

/// Number of profiles `for_each_profile` would visit.
std::size_t count_profiles(int domain_size, const SearchOptions& opts);

/// Visits every profile over `d` with n_min <= n <= n_max in canonical order
/// (by size, then lexicographically). Stops early when `visit` returns true.
/// Throws BudgetExceeded before visiting anything if the space is too large.
void for_each_profile(const Domain& d, const SearchOptions& opts,
                      const std::function<bool(const Profile&)>& visit);

enum class Axiom { Maximin, Equity, Majoritarian, SenHammond, PigouDalton };

/// "maximin" | "equity" | "majoritarian" | "sen-hammond" | "pigou-dalton".
Axiom axiom_from_name(std::string_view name);
std::string to_string(Axiom a);

/// Data sufficient to re-check a violation by hand. For the pairwise axioms
/// `judgments` is (J, J') and `agents` is (i, j), 1-based.
struct Witness {
  Profile profile;
  std::vector<Judgment> judgments;
  std::vector<int> agents;
  std::string description;
};

struct AxiomReport {
  enum class Verdict { HoldsOnSearchedSpace, Counterexample };

  std::string property;
  Verdict verdict = Verdict::HoldsOnSearchedSpace;
  std::optional<Witness> witness;
  /// Populated by the strategyproofness-style checks.
  std::optional<ManipulationFinding> finding;
  std::size_t profiles_searched = 0;
  int n_max = 0;
  int domain_size = 0;
  std::string detail;

  bool holds() const noexcept { return verdict == Verdict::HoldsOnSearchedSpace; }
  std::string str() const;
};

AxiomReport check_maximin(const RuleSpec& rule, const Domain& d, const SearchOptions& opts = {});
AxiomReport check_equity(const RuleSpec& rule, const Domain& d, const SearchOptions& opts = {});
AxiomReport check_majoritarian(const RuleSpec& rule, const Domain& d,
                               const SearchOptions& opts = {});
AxiomReport check_sen_hammond(const RuleSpec& rule, const Domain& d,
                              const SearchOptions& opts = {});
AxiomReport check_pigou_dalton(const RuleSpec& rule, const Domain& d,
                               const SearchOptions& opts = {});

AxiomReport check_axiom(Axiom a, const RuleSpec& rule, const Domain& d,
                        const SearchOptions& opts = {});

/// Premise of Sen-Hammond for agents i, j (1-based) and candidates J, J':
/// H(Ji,J) < H(Ji,J') < H(Jj,J') < H(Jj,J), every other agent equidistant.
bool sen_hammond_premise(const Profile& p, int i, int j, const Judgment& jx,
                         const Judgment& jy);

/// Premise of Pigou-Dalton: H(Ji,J) < H(Ji,J') <= H(Jj,J') < H(Jj,J), the
/// same amount moved in each direction, every other agent equidistant.
bool pigou_dalton_premise(const Profile& p, int i, int j, const Judgment& jx,
                          const Judgment& jy);

}  // namespace egal
