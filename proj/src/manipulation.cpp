#include "egal/manipulation.hpp"

#include <sstream>

namespace egal {

ManipulationKind manipulation_kind_from_name(std::string_view name) {
  if (name == "general") return ManipulationKind::General;
  if (name == "no-show") return ManipulationKind::NoShow;
  if (name == "antipodal") return ManipulationKind::Antipodal;
  throw InvalidArgument("unknown manipulation kind '" + std::string(name) +
                        "' (expected general, no-show or antipodal)");
}

std::string to_string(ManipulationKind kind) {
  switch (kind) {
    case ManipulationKind::General: return "general";
    case ManipulationKind::NoShow: return "no-show";
    case ManipulationKind::Antipodal: return "antipodal";
  }
  return "?";
}

Profile ManipulationFinding::deviated_profile() const {
  if (kind == ManipulationKind::NoShow) return profile.without(manipulator);
  return profile.replaced(manipulator, *untruthful);
}

std::string ManipulationFinding::str() const {
  std::ostringstream os;
  os << to_string(kind) << " manipulation by agent " << manipulator << " in "
     << profile.str() << ": ";
  if (untruthful) {
    os << "reporting " << untruthful->str() << " instead of "
       << profile.agent(manipulator).str();
  } else {
    os << "abstaining";
  }
  os << " moves the outcome " << before.str() << " -> " << after.str();
  if (witness) {
    os << " (" << witness->first.str() << " at distance "
       << hamming(profile.agent(manipulator), witness->first) << " beats "
       << witness->second.str() << " at distance "
       << hamming(profile.agent(manipulator), witness->second) << ")";
  }
  return os.str();
}

namespace {

void check_instance(const Domain& d, const Profile& p, int i) {
  d.check_profile(p);
  (void)p.agent(i);
}

std::optional<ManipulationFinding> try_deviation(ManipulationKind kind, const RuleSpec& rule,
                                                 ExtensionKind ext, const Domain& d,
                                                 const Profile& p, int i, const Outcome& before,
                                                 std::optional<Judgment> report) {
  const Profile deviated = report ? p.replaced(i, *report) : p.without(i);
  Outcome after = apply_rule(rule, d, deviated);
  const Judgment& truth = p.agent(i);
  if (!set_prefers(ext, truth, after, before)) return std::nullopt;
  auto witness = decisive_witness(truth, after, before);
  return ManipulationFinding{kind, p, i, report, before, std::move(after), std::move(witness)};
}

}  // namespace

std::vector<ManipulationFinding> find_all_manipulations(const RuleSpec& rule, ExtensionKind ext,
                                                        const Domain& d, const Profile& p, int i) {
  check_instance(d, p, i);
  const Outcome before = apply_rule(rule, d, p);
  std::vector<ManipulationFinding> out;
  for (const auto& report : d) {
    if (report == p.agent(i)) continue;
    if (auto f = try_deviation(ManipulationKind::General, rule, ext, d, p, i, before, report)) {
      out.push_back(std::move(*f));
    }
  }
  return out;
}

std::optional<ManipulationFinding> find_manipulation(const RuleSpec& rule, ExtensionKind ext,
                                                     const Domain& d, const Profile& p, int i) {
  check_instance(d, p, i);
  const Outcome before = apply_rule(rule, d, p);
  for (const auto& report : d) {
    if (report == p.agent(i)) continue;
    if (auto f = try_deviation(ManipulationKind::General, rule, ext, d, p, i, before, report)) {
      return f;
    }
  }
  return std::nullopt;
}

std::optional<ManipulationFinding> find_noshow(const RuleSpec& rule, ExtensionKind ext,
                                               const Domain& d, const Profile& p, int i) {
  check_instance(d, p, i);
  if (p.size() < 2) throw InvalidArgument("no-show needs at least two agents");
  return try_deviation(ManipulationKind::NoShow, rule, ext, d, p, i, apply_rule(rule, d, p),
                       std::nullopt);
}

AntipodalResult find_antipodal(const RuleSpec& rule, ExtensionKind ext, const Domain& d,
                               const Profile& p, int i) {
  check_instance(d, p, i);
  const Judgment flipped = antipodal(p.agent(i));
  if (!d.contains(flipped)) return AntipodalResult{false, std::nullopt};
  return AntipodalResult{true, try_deviation(ManipulationKind::Antipodal, rule, ext, d, p, i,
                                             apply_rule(rule, d, p), flipped)};
}

RuleProperty rule_property_from_name(std::string_view name) {
  if (name == "strategyproofness") return RuleProperty::Strategyproofness;
  if (name == "participation") return RuleProperty::Participation;
  if (name == "antipodal-sp") return RuleProperty::AntipodalStrategyproofness;
  throw InvalidArgument("unknown rule property '" + std::string(name) + "'");
}

std::string to_string(RuleProperty prop) {
  switch (prop) {
    case RuleProperty::Strategyproofness: return "strategyproofness";
    case RuleProperty::Participation: return "participation";
    case RuleProperty::AntipodalStrategyproofness: return "antipodal-sp";
  }
  return "?";
}

AxiomReport check_rule(RuleProperty prop, const RuleSpec& rule, ExtensionKind ext,
                       const Domain& d, const SearchOptions& opts) {
  AxiomReport report;
  report.property = to_string(prop) + " (" + to_string(ext) + ")";
  report.n_max = opts.n_max;
  report.domain_size = d.size();
  std::size_t inapplicable = 0;
  for_each_profile(d, opts, [&](const Profile& p) {
    ++report.profiles_searched;
    for (int i = 1; i <= p.size(); ++i) {
      std::optional<ManipulationFinding> f;
      switch (prop) {
        case RuleProperty::Strategyproofness:
          f = find_manipulation(rule, ext, d, p, i);
          break;
        case RuleProperty::Participation:
          if (p.size() >= 2) f = find_noshow(rule, ext, d, p, i);
          break;
        case RuleProperty::AntipodalStrategyproofness: {
          auto r = find_antipodal(rule, ext, d, p, i);
          if (!r.applicable) ++inapplicable;
          f = std::move(r.finding);
          break;
        }
      }
      if (f) {
        report.verdict = AxiomReport::Verdict::Counterexample;
        report.finding = std::move(f);
        return true;
      }
    }
    return false;
  });
  if (inapplicable > 0) {
    report.detail = std::to_string(inapplicable) +
                    " (profile, agent) pairs skipped: antipodal judgment not admissible";
  }
  return report;
}

AxiomReport check_part_implies_antipodal(const RuleSpec& rule, const Domain& d,
                                         const SearchOptions& opts, ExtensionKind ext) {
  const AxiomReport participation = check_rule(RuleProperty::Participation, rule, ext, d, opts);
  const AxiomReport antipodal_sp =
      check_rule(RuleProperty::AntipodalStrategyproofness, rule, ext, d, opts);
  AxiomReport report;
  report.property = "participation => antipodal-sp (" + to_string(ext) + ")";
  report.n_max = opts.n_max;
  report.domain_size = d.size();
  report.profiles_searched = participation.profiles_searched + antipodal_sp.profiles_searched;
  report.detail = std::string("participation ") +
                  (participation.holds() ? "holds" : "violated") + ", antipodal-sp " +
                  (antipodal_sp.holds() ? "holds" : "violated");
  if (participation.holds() && !antipodal_sp.holds()) {
    report.verdict = AxiomReport::Verdict::Counterexample;
    report.finding = antipodal_sp.finding;
  }
  return report;
}

bool finding_reverifies(const ManipulationFinding& f, const RuleSpec& rule, ExtensionKind ext,
                        const Domain& d) {
  const Outcome before = apply_rule(rule, d, f.profile);
  const Outcome after = apply_rule(rule, d, f.deviated_profile());
  if (!(before == f.before) || !(after == f.after)) return false;
  if (f.kind == ManipulationKind::Antipodal &&
      (!f.untruthful || *f.untruthful != antipodal(f.profile.agent(f.manipulator)))) {
    return false;
  }
  return set_prefers(ext, f.profile.agent(f.manipulator), after, before);
}

}  // namespace egal
