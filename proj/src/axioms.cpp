#include "egal/axioms.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace egal {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

// C(k + n - 1, n), saturating.
std::size_t multichoose(std::size_t k, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t t = 1; t <= n; ++t) {
    // r * (k + t - 1) / t stays integral at every step.
    const std::size_t num = sat_mul(r, k + t - 1);
    if (num == kSaturated) return kSaturated;
    r = num / t;
  }
  return r;
}

}  // namespace

std::size_t count_profiles(int domain_size, const SearchOptions& opts) {
  std::size_t total = 0;
  const auto k = static_cast<std::size_t>(domain_size);
  for (int n = std::max(1, opts.n_min); n <= opts.n_max; ++n) {
    std::size_t c = 1;
    if (opts.ordered) {
      for (int t = 0; t < n; ++t) c = sat_mul(c, k);
    } else {
      c = multichoose(k, static_cast<std::size_t>(n));
    }
    total = sat_add(total, c);
  }
  return total;
}

void for_each_profile(const Domain& d, const SearchOptions& opts,
                      const std::function<bool(const Profile&)>& visit) {
  if (opts.n_max < 1) throw InvalidArgument("n_max must be at least 1");
  const std::size_t total = count_profiles(d.size(), opts);
  if (total > opts.budget) {
    throw BudgetExceeded("search over " + std::to_string(d.size()) + " judgments with n <= " +
                         std::to_string(opts.n_max) + " visits " +
                         (total == kSaturated ? std::string("too many") : std::to_string(total)) +
                         " profiles, budget is " + std::to_string(opts.budget));
  }
  const auto& members = d.members();
  const int k = d.size();
  for (int n = std::max(1, opts.n_min); n <= opts.n_max; ++n) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Judgment> js;
      js.reserve(idx.size());
      for (int t : idx) js.push_back(members[static_cast<std::size_t>(t)]);
      if (visit(Profile(std::move(js)))) return;
      // Advance the odometer; multisets keep idx non-decreasing.
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1) --pos;
      if (pos < 0) break;
      const int next = ++idx[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < n; ++t) idx[static_cast<std::size_t>(t)] = opts.ordered ? 0 : next;
    }
  }
}

Axiom axiom_from_name(std::string_view name) {
  if (name == "maximin") return Axiom::Maximin;
  if (name == "equity") return Axiom::Equity;
  if (name == "majoritarian") return Axiom::Majoritarian;
  if (name == "sen-hammond") return Axiom::SenHammond;
  if (name == "pigou-dalton") return Axiom::PigouDalton;
  throw InvalidArgument("unknown axiom '" + std::string(name) + "'");
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Maximin: return "maximin";
    case Axiom::Equity: return "equity";
    case Axiom::Majoritarian: return "majoritarian";
    case Axiom::SenHammond: return "sen-hammond";
    case Axiom::PigouDalton: return "pigou-dalton";
  }
  return "?";
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  os << property << ": "
     << (holds() ? "holds on searched space" : "counterexample") << " (" << profiles_searched
     << " profiles, n <= " << n_max << ", |d| = " << domain_size << ")";
  if (witness) {
    os << "\n  profile " << witness->profile.str();
    if (!witness->judgments.empty()) {
      os << "\n  judgments";
      for (const auto& j : witness->judgments) os << ' ' << j.str();
    }
    if (!witness->agents.empty()) {
      os << "\n  agents";
      for (int a : witness->agents) os << ' ' << a;
    }
    if (!witness->description.empty()) os << "\n  " << witness->description;
  }
  if (finding) os << "\n  " << finding->str();
  if (!detail.empty()) os << "\n  " << detail;
  return os.str();
}

// --- premises ---------------------------------------------------------------

namespace {

bool others_equidistant(const Profile& p, int i, int j, const Judgment& jx, const Judgment& jy) {
  for (int a = 1; a <= p.size(); ++a) {
    if (a == i || a == j) continue;
    if (hamming(p.agent(a), jx) != hamming(p.agent(a), jy)) return false;
  }
  return true;
}

}  // namespace

bool sen_hammond_premise(const Profile& p, int i, int j, const Judgment& jx,
                         const Judgment& jy) {
  if (i == j) return false;
  const int a = hamming(p.agent(i), jx);
  const int b = hamming(p.agent(i), jy);
  const int c = hamming(p.agent(j), jy);
  const int e = hamming(p.agent(j), jx);
  return a < b && b < c && c < e && others_equidistant(p, i, j, jx, jy);
}

bool pigou_dalton_premise(const Profile& p, int i, int j, const Judgment& jx,
                          const Judgment& jy) {
  if (i == j) return false;
  const int a = hamming(p.agent(i), jx);
  const int b = hamming(p.agent(i), jy);
  const int c = hamming(p.agent(j), jy);
  const int e = hamming(p.agent(j), jx);
  // Agent i loses exactly what agent j gains.
  return a < b && b <= c && c < e && (b - a) == (e - c) && others_equidistant(p, i, j, jx, jy);
}

// --- checkers ---------------------------------------------------------------

namespace {

/// Runs `probe` on every profile until it produces a witness.
template <typename Probe>
AxiomReport scan(std::string property, const RuleSpec& rule, const Domain& d,
                 const SearchOptions& opts, Probe probe) {
  AxiomReport report;
  report.property = std::move(property);
  report.n_max = opts.n_max;
  report.domain_size = d.size();
  for_each_profile(d, opts, [&](const Profile& p) {
    ++report.profiles_searched;
    const Outcome out = apply_rule(rule, d, p);
    if (auto w = probe(p, out)) {
      report.verdict = AxiomReport::Verdict::Counterexample;
      report.witness = std::move(w);
      return true;
    }
    return false;
  });
  return report;
}

int first_agent_at(const Profile& p, const Judgment& j, int dist) {
  for (int a = 1; a <= p.size(); ++a) {
    if (hamming(p.agent(a), j) == dist) return a;
  }
  return 0;
}

}  // namespace

AxiomReport check_maximin(const RuleSpec& rule, const Domain& d, const SearchOptions& opts) {
  return scan("maximin", rule, d, opts,
              [&](const Profile& p, const Outcome& out) -> std::optional<Witness> {
                const Outcome best = max_ham(d, p);
                for (const auto& j : out) {
                  if (best.contains(j)) continue;
                  const Judgment& better = best.winners().front();
                  const int worst = maxdist(p, j);
                  return Witness{p,
                                 {j, better},
                                 {first_agent_at(p, j, worst)},
                                 "every agent is closer to " + better.str() + " (max " +
                                     std::to_string(maxdist(p, better)) + ") than agent " +
                                     std::to_string(first_agent_at(p, j, worst)) + " is to " +
                                     j.str() + " (" + std::to_string(worst) + ")"};
                }
                return std::nullopt;
              });
}

AxiomReport check_equity(const RuleSpec& rule, const Domain& d, const SearchOptions& opts) {
  return scan("equity", rule, d, opts,
              [&](const Profile& p, const Outcome& out) -> std::optional<Witness> {
                const Outcome best = max_eq(d, p);
                for (const auto& j : out) {
                  if (best.contains(j)) continue;
                  const Judgment& better = best.winners().front();
                  const auto s = score(p, j);
                  return Witness{p,
                                 {j, better},
                                 {first_agent_at(p, j, s.maxdist), first_agent_at(p, j, s.mindist)},
                                 "inequity of " + better.str() + " is " +
                                     std::to_string(inequity(p, better)) + ", below " +
                                     std::to_string(s.inequity) + " for " + j.str()};
                }
                return std::nullopt;
              });
}

AxiomReport check_majoritarian(const RuleSpec& rule, const Domain& d,
                               const SearchOptions& opts) {
  return scan("majoritarian", rule, d, opts,
              [&](const Profile& p, const Outcome& out) -> std::optional<Witness> {
                const Judgment m = majority_judgment(p);
                if (!d.contains(m) || out == Outcome{m}) return std::nullopt;
                std::vector<Judgment> js{m};
                js.insert(js.end(), out.begin(), out.end());
                return Witness{p, std::move(js), {},
                               "majority judgment " + m.str() + " is admissible but the rule returns " +
                                   out.str()};
              });
}

AxiomReport check_sen_hammond(const RuleSpec& rule, const Domain& d,
                              const SearchOptions& opts) {
  return scan("sen-hammond", rule, d, opts,
              [&](const Profile& p, const Outcome& out) -> std::optional<Witness> {
                for (const auto& jx : out) {
                  for (const auto& jy : d) {
                    if (out.contains(jy)) continue;
                    for (int i = 1; i <= p.size(); ++i) {
                      for (int j = 1; j <= p.size(); ++j) {
                        if (sen_hammond_premise(p, i, j, jx, jy)) {
                          return Witness{p, {jx, jy}, {i, j},
                                         jx.str() + " is selected but the more equal " + jy.str() +
                                             " is not"};
                        }
                      }
                    }
                  }
                }
                return std::nullopt;
              });
}

AxiomReport check_pigou_dalton(const RuleSpec& rule, const Domain& d,
                               const SearchOptions& opts) {
  return scan("pigou-dalton", rule, d, opts,
              [&](const Profile& p, const Outcome& out) -> std::optional<Witness> {
                for (const auto& jx : out) {
                  for (const auto& jy : out) {
                    for (int i = 1; i <= p.size(); ++i) {
                      for (int j = 1; j <= p.size(); ++j) {
                        if (pigou_dalton_premise(p, i, j, jx, jy)) {
                          return Witness{p, {jx, jy}, {i, j},
                                         "both " + jx.str() + " and its transfer " + jy.str() +
                                             " are selected"};
                        }
                      }
                    }
                  }
                }
                return std::nullopt;
              });
}

AxiomReport check_axiom(Axiom a, const RuleSpec& rule, const Domain& d,
                        const SearchOptions& opts) {
  switch (a) {
    case Axiom::Maximin: return check_maximin(rule, d, opts);
    case Axiom::Equity: return check_equity(rule, d, opts);
    case Axiom::Majoritarian: return check_majoritarian(rule, d, opts);
    case Axiom::SenHammond: return check_sen_hammond(rule, d, opts);
    case Axiom::PigouDalton: return check_pigou_dalton(rule, d, opts);
  }
  throw InvalidArgument("unhandled axiom");
}

}  // namespace egal
