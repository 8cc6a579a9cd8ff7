#include "egal/core.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace egal {

namespace {

std::uint64_t mask_for(int width) {
  return width == 0 ? 0 : (std::uint64_t{1} << width) - 1;
}

std::vector<Judgment> parse_all(const std::vector<std::string>& bitstrings) {
  std::vector<Judgment> out;
  out.reserve(bitstrings.size());
  for (const auto& s : bitstrings) out.push_back(Judgment::parse(s));
  return out;
}

void require_uniform_width(const std::vector<Judgment>& js, const char* what) {
  for (const auto& j : js) {
    if (j.width() != js.front().width()) {
      throw DimensionError(std::string(what) + ": judgments of widths " +
                           std::to_string(js.front().width()) + " and " +
                           std::to_string(j.width()) + " mixed");
    }
  }
}

}  // namespace

// --- Judgment ---------------------------------------------------------------

Judgment::Judgment(std::uint64_t bits, int width) : width_(width), bits_(bits) {
  if (width < 0 || width > kMaxWidth) {
    throw DimensionError("judgment width " + std::to_string(width) +
                         " outside [0, " + std::to_string(kMaxWidth) + "]");
  }
  if ((bits & ~mask_for(width)) != 0) {
    throw DimensionError("judgment bits exceed width " + std::to_string(width));
  }
}

Judgment Judgment::parse(std::string_view text) {
  if (text.empty()) throw SyntaxError("empty bitstring", 0);
  if (text.size() > static_cast<std::size_t>(kMaxWidth)) {
    throw SyntaxError("bitstring longer than " + std::to_string(kMaxWidth), kMaxWidth);
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c != '0' && c != '1') {
      throw SyntaxError(std::string("expected '0' or '1' in bitstring \"") +
                            std::string(text) + "\"",
                        k);
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Judgment(bits, static_cast<int>(text.size()));
}

bool Judgment::accepts(int k) const {
  if (k < 0 || k >= width_) throw DimensionError("issue index out of range");
  return ((bits_ >> (width_ - 1 - k)) & 1U) != 0;
}

Judgment Judgment::with(int k, bool accepted) const {
  if (k < 0 || k >= width_) throw DimensionError("issue index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - k);
  return Judgment(accepted ? (bits_ | bit) : (bits_ & ~bit), width_);
}

int Judgment::count_accepted() const { return std::popcount(bits_); }

std::string Judgment::str() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int k = 0; k < width_; ++k) {
    if ((bits_ >> (width_ - 1 - k)) & 1U) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

int hamming(const Judgment& a, const Judgment& b) {
  if (a.width() != b.width()) {
    throw DimensionError("hamming: widths " + std::to_string(a.width()) + " and " +
                         std::to_string(b.width()) + " differ");
  }
  return std::popcount(a.bits() ^ b.bits());
}

Judgment antipodal(const Judgment& a) {
  return Judgment(a.bits() ^ mask_for(a.width()), a.width());
}

// --- Agenda -----------------------------------------------------------------

Agenda::Agenda(std::vector<std::string> issues, std::optional<Formula> constraint)
    : issues_(std::move(issues)), constraint_(std::move(constraint)) {
  if (issues_.empty()) throw InvalidArgument("agenda needs at least one issue");
  if (static_cast<int>(issues_.size()) > Judgment::kMaxWidth) {
    throw InvalidArgument("agenda has more than " + std::to_string(Judgment::kMaxWidth) +
                          " issues");
  }
  std::set<std::string> seen;
  for (const auto& label : issues_) {
    if (label.empty()) throw InvalidArgument("empty issue label");
    if (!seen.insert(label).second) throw InvalidArgument("duplicate issue label '" + label + "'");
  }
  if (constraint_) {
    for (const auto& v : constraint_->variables()) {
      if (!seen.contains(v)) {
        throw InvalidArgument("constraint mentions undeclared issue '" + v + "'");
      }
    }
  }
}

int Agenda::index_of(std::string_view label) const {
  auto it = std::find(issues_.begin(), issues_.end(), label);
  return it == issues_.end() ? -1 : static_cast<int>(it - issues_.begin());
}

// --- Profile ----------------------------------------------------------------

Profile::Profile(std::vector<Judgment> judgments) : judgments_(std::move(judgments)) {
  require_uniform_width(judgments_, "profile");
}

Profile::Profile(std::initializer_list<Judgment> judgments)
    : Profile(std::vector<Judgment>(judgments)) {}

Profile Profile::parse(const std::vector<std::string>& bitstrings) {
  return Profile(parse_all(bitstrings));
}

int Profile::width() const {
  if (judgments_.empty()) throw InvalidArgument("empty profile has no width");
  return judgments_.front().width();
}

void Profile::check_agent(int i) const {
  if (i < 1 || i > size()) {
    throw InvalidArgument("agent index " + std::to_string(i) + " outside 1.." +
                          std::to_string(size()));
  }
}

const Judgment& Profile::agent(int i) const {
  check_agent(i);
  return judgments_[static_cast<std::size_t>(i - 1)];
}

Profile Profile::without(int i) const {
  check_agent(i);
  if (size() == 1) throw InvalidArgument("removing the only agent leaves an empty profile");
  auto js = judgments_;
  js.erase(js.begin() + (i - 1));
  return Profile(std::move(js));
}

Profile Profile::inserted(int i, const Judgment& j) const {
  if (i < 1 || i > size() + 1) throw InvalidArgument("insert position out of range");
  if (!empty() && j.width() != width()) throw DimensionError("inserted judgment width mismatch");
  auto js = judgments_;
  js.insert(js.begin() + (i - 1), j);
  return Profile(std::move(js));
}

Profile Profile::replaced(int i, const Judgment& j) const {
  check_agent(i);
  if (j.width() != width()) throw DimensionError("replacement judgment width mismatch");
  auto js = judgments_;
  js[static_cast<std::size_t>(i - 1)] = j;
  return Profile(std::move(js));
}

Profile Profile::appended(const Judgment& j) const { return inserted(size() + 1, j); }

std::string Profile::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < judgments_.size(); ++k) {
    if (k) s += ", ";
    s += judgments_[k].str();
  }
  return s + ")";
}

Profile remove_agent(const Profile& p, int i) { return p.without(i); }

// --- Domain -----------------------------------------------------------------

Domain::Domain(std::vector<Judgment> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("domain must be nonempty");
  require_uniform_width(members_, "domain");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("domain lists a judgment twice");
  }
}

Domain Domain::parse(const std::vector<std::string>& bitstrings) {
  return Domain(parse_all(bitstrings));
}

Domain Domain::free(int m) {
  if (m < 1 || m > 30) throw CapacityError("free domain width out of range", 30);
  std::vector<Judgment> all;
  all.reserve(std::size_t{1} << m);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) all.emplace_back(b, m);
  return Domain(std::move(all));
}

bool Domain::contains(const Judgment& j) const {
  return std::binary_search(members_.begin(), members_.end(), j);
}

void Domain::check_profile(const Profile& p) const {
  if (p.empty()) throw InvalidArgument("profile must contain at least one agent");
  for (int i = 1; i <= p.size(); ++i) {
    const auto& j = p.agent(i);
    if (j.width() != width()) {
      throw DimensionError("agent " + std::to_string(i) + " judges " +
                           std::to_string(j.width()) + " issues, domain has " +
                           std::to_string(width()));
    }
    if (!contains(j)) {
      throw InvalidArgument("agent " + std::to_string(i) + "'s judgment " + j.str() +
                            " is not admissible");
    }
  }
}

// --- Outcome ----------------------------------------------------------------

Outcome::Outcome(std::vector<Judgment> winners) : winners_(std::move(winners)) {
  if (winners_.empty()) throw InvalidArgument("outcome must be nonempty");
  require_uniform_width(winners_, "outcome");
  std::sort(winners_.begin(), winners_.end());
  winners_.erase(std::unique(winners_.begin(), winners_.end()), winners_.end());
}

Outcome::Outcome(std::initializer_list<Judgment> winners)
    : Outcome(std::vector<Judgment>(winners)) {}

Outcome Outcome::parse(const std::vector<std::string>& bitstrings) {
  return Outcome(parse_all(bitstrings));
}

bool Outcome::contains(const Judgment& j) const {
  return std::binary_search(winners_.begin(), winners_.end(), j);
}

bool Outcome::subset_of(const Outcome& other) const {
  return std::includes(other.winners_.begin(), other.winners_.end(), winners_.begin(),
                       winners_.end());
}

std::string Outcome::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < winners_.size(); ++k) {
    if (k) os << ", ";
    os << winners_[k].str();
  }
  os << '}';
  return os.str();
}

// --- majority ---------------------------------------------------------------

Judgment majority_judgment(const Profile& p) {
  const int m = p.width();
  const int n = p.size();
  Judgment result(0, m);
  for (int k = 0; k < m; ++k) {
    int accept = 0;
    for (const auto& j : p) accept += j.accepts(k) ? 1 : 0;
    if (2 * accept > n) result = result.with(k, true);
  }
  return result;
}

}  // namespace egal
