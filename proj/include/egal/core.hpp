#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egal/errors.hpp"
#include "egal/formula.hpp"

namespace egal {

/// A complete binary judgment over an agenda of `width()` issues.
///
/// Issue k (0-based, leftmost character of the text form) is stored at bit
/// `width - 1 - k`, so numeric order of `bits()` coincides with the
/// lexicographic order of the bitstrings. All containers in this library use
/// that order as their canonical order.
class Judgment {
 public:
  static constexpr int kMaxWidth = 63;

  Judgment() = default;
  Judgment(std::uint64_t bits, int width);

  /// Parses a bitstring such as "0110". Throws SyntaxError.
  static Judgment parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  /// Whether issue `k` (0-based) is accepted.
  bool accepts(int k) const;
  Judgment with(int k, bool accepted) const;
  int count_accepted() const;

  std::string str() const;

  auto operator<=>(const Judgment&) const = default;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Number of issues on which `a` and `b` disagree. Throws DimensionError.
int hamming(const Judgment& a, const Judgment& b);

/// The judgment that flips every issue.
Judgment antipodal(const Judgment& a);

/// Ordered distinct issue labels plus an optional integrity constraint.
class Agenda {
 public:
  explicit Agenda(std::vector<std::string> issues,
                  std::optional<Formula> constraint = std::nullopt);

  int size() const noexcept { return static_cast<int>(issues_.size()); }
  const std::vector<std::string>& issues() const noexcept { return issues_; }
  const std::optional<Formula>& constraint() const noexcept { return constraint_; }

  /// Position of `label`, or -1.
  int index_of(std::string_view label) const;

 private:
  std::vector<std::string> issues_;
  std::optional<Formula> constraint_;
};

/// Ordered list of agents' judgments. Agents are addressed 1-based.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Judgment> judgments);
  Profile(std::initializer_list<Judgment> judgments);
  static Profile parse(const std::vector<std::string>& bitstrings);

  int size() const noexcept { return static_cast<int>(judgments_.size()); }
  bool empty() const noexcept { return judgments_.empty(); }
  int width() const;

  /// Judgment of agent `i` (1-based).
  const Judgment& agent(int i) const;
  const std::vector<Judgment>& judgments() const noexcept { return judgments_; }

  auto begin() const noexcept { return judgments_.begin(); }
  auto end() const noexcept { return judgments_.end(); }

  /// Pf_{-i}. Rejects the removal of the last agent.
  Profile without(int i) const;
  /// Inverse of `without`: the result has `j` as agent `i`.
  Profile inserted(int i, const Judgment& j) const;
  /// Same profile with agent `i` reporting `j` instead.
  Profile replaced(int i, const Judgment& j) const;
  /// (Pf, J).
  Profile appended(const Judgment& j) const;

  std::string str() const;

  bool operator==(const Profile&) const = default;

 private:
  void check_agent(int i) const;
  std::vector<Judgment> judgments_;
};

/// A nonempty set of admissible judgments, held in canonical order.
class Domain {
 public:
  /// Sorts and validates: nonempty, uniform width, no duplicates.
  explicit Domain(std::vector<Judgment> members);
  static Domain parse(const std::vector<std::string>& bitstrings);
  /// All 2^m judgments.
  static Domain free(int m);

  int width() const noexcept { return members_.front().width(); }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(const Judgment& j) const;
  const std::vector<Judgment>& members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Throws InvalidArgument unless every profile member lies in the domain.
  void check_profile(const Profile& p) const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<Judgment> members_;
};

/// Nonempty tie-set of collective judgments in canonical order.
class Outcome {
 public:
  explicit Outcome(std::vector<Judgment> winners);
  Outcome(std::initializer_list<Judgment> winners);
  static Outcome parse(const std::vector<std::string>& bitstrings);

  int size() const noexcept { return static_cast<int>(winners_.size()); }
  bool contains(const Judgment& j) const;
  const std::vector<Judgment>& winners() const noexcept { return winners_; }

  auto begin() const noexcept { return winners_.begin(); }
  auto end() const noexcept { return winners_.end(); }

  bool subset_of(const Outcome& other) const;

  /// "{010000, 111111}"
  std::string str() const;

  bool operator==(const Outcome&) const = default;

 private:
  std::vector<Judgment> winners_;
};

/// Issue-wise strict-majority judgment; exact ties reject the issue.
Judgment majority_judgment(const Profile& p);

/// Free function form of Profile::without.
Profile remove_agent(const Profile& p, int i);

}  // namespace egal
