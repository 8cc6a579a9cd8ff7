// egalja: command-line front end over the egalitarian aggregation library.
//
// Exit status: 0 clean / holds / nothing found, 1 counterexample or finding,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "egal/asp.hpp"
#include "egal/axioms.hpp"
#include "egal/gadgets.hpp"
#include "egal/instance.hpp"
#include "egal/manipulation.hpp"
#include "egal/rules.hpp"

namespace {

using nlohmann::ordered_json;
using namespace egal;

constexpr int kClean = 0;
constexpr int kFound = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ordered_json judgments_json(const std::vector<Judgment>& js) {
  ordered_json out = ordered_json::array();
  for (const auto& j : js) out.push_back(j.str());
  return out;
}

ordered_json finding_json(const ManipulationFinding& f) {
  ordered_json out;
  out["kind"] = to_string(f.kind);
  out["profile"] = judgments_json(f.profile.judgments());
  out["manipulator"] = f.manipulator;
  out["untruthful"] = f.untruthful ? ordered_json(f.untruthful->str()) : ordered_json(nullptr);
  out["before"] = judgments_json(f.before.winners());
  out["after"] = judgments_json(f.after.winners());
  if (f.witness) {
    out["witness"] = {f.witness->first.str(), f.witness->second.str()};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ordered_json report_json(const AxiomReport& r) {
  ordered_json out;
  out["property"] = r.property;
  out["verdict"] = r.holds() ? "holds" : "counterexample";
  out["profiles_searched"] = r.profiles_searched;
  out["n_max"] = r.n_max;
  out["domain_size"] = r.domain_size;
  if (r.witness) {
    out["witness"] = {{"profile", judgments_json(r.witness->profile.judgments())},
                      {"judgments", judgments_json(r.witness->judgments)},
                      {"agents", r.witness->agents},
                      {"description", r.witness->description}};
  }
  if (r.finding) out["finding"] = finding_json(*r.finding);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

asp::Objective objective_for(const RuleSpec& rule) {
  switch (rule.kind()) {
    case RuleSpec::Kind::MaxEq: return asp::Objective::MaxEq;
    case RuleSpec::Kind::MaxEqThenMaxHam: return asp::Objective::MaxEqThenMaxHam;
    default: break;
  }
  throw InvalidArgument("no ASP encoding for rule '" + rule.name() +
                        "' (use maxeq or maxeq-lex)");
}

asp::Scenario scenario_of(const Instance& inst) {
  return asp::Scenario{inst.agenda, inst.explicit_domain, inst.profile};
}

void require_profile(const Instance& inst) {
  if (inst.profile.empty()) throw InvalidArgument("instance has an empty profile");
}

// --- commands ---------------------------------------------------------------

struct Common {
  std::string rule = "maxham";
  std::string extension = "decisive";
  int n_max = 3;
  bool json = false;
  std::string solver;
};

int cmd_outcome(const Common& c, const std::string& file, bool show_breakdown) {
  const Instance inst = parse_instance(slurp(file));
  require_profile(inst);
  const RuleSpec rule = RuleSpec::from_name(c.rule);
  const Domain d = inst.domain(enumeration_cap_from_env());
  const Outcome out = apply_rule(rule, d, inst.profile);

  std::optional<std::vector<Judgment>> solved;
  if (!c.solver.empty()) {
    const auto prog = asp::emit_outcome_program(scenario_of(inst), objective_for(rule));
    solved = asp::parse_answer_sets(asp::run_solver(c.solver, prog.text()), inst.agenda);
  }
  const bool agree = !solved || *solved == out.winners();

  if (c.json) {
    ordered_json doc;
    doc["rule"] = rule.name();
    doc["outcome"] = judgments_json(out.winners());
    if (show_breakdown) {
      auto& rows = doc["breakdown"] = ordered_json::array();
      for (const auto& b : breakdown(d, inst.profile)) {
        rows.push_back({{"judgment", b.judgment.str()},
                        {"distances", b.distances},
                        {"maxdist", b.maxdist},
                        {"mindist", b.mindist},
                        {"inequity", b.inequity},
                        {"selected", out.contains(b.judgment)}});
      }
    }
    if (solved) {
      doc["solver_outcome"] = judgments_json(*solved);
      doc["solver_agrees"] = agree;
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << out.str() << '\n';
    if (show_breakdown) {
      std::cout << "judgment  maxdist  mindist  inequity  distances\n";
      for (const auto& b : breakdown(d, inst.profile)) {
        std::cout << (out.contains(b.judgment) ? '*' : ' ') << b.judgment.str() << "  "
                  << b.maxdist << "  " << b.mindist << "  " << b.inequity << " ";
        for (int dist : b.distances) std::cout << ' ' << dist;
        std::cout << '\n';
      }
    }
    if (solved) {
      std::cout << "solver: " << (solved->empty() ? "{}" : Outcome(*solved).str())
                << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
  }
  return agree ? kClean : kFound;
}

int cmd_axiom(const Common& c, const std::string& file, int free_m, const std::string& name,
              std::size_t budget, bool ordered) {
  if (file.empty() == (free_m == 0)) {
    throw InvalidArgument("give exactly one of an instance file or --free M");
  }
  const Domain d = file.empty() ? Domain::free(free_m)
                                : parse_instance(slurp(file)).domain(enumeration_cap_from_env());
  SearchOptions opts;
  opts.n_max = c.n_max;
  opts.budget = budget;
  opts.ordered = ordered;
  const RuleSpec rule = RuleSpec::from_name(c.rule);

  AxiomReport report;
  if (name == "strategyproofness" || name == "participation" || name == "antipodal-sp") {
    report = check_rule(rule_property_from_name(name), rule, extension_from_name(c.extension), d,
                        opts);
  } else {
    report = check_axiom(axiom_from_name(name), rule, d, opts);
  }
  if (c.json) {
    std::cout << report_json(report).dump(2) << '\n';
  } else {
    std::cout << report.str() << '\n';
  }
  return report.holds() ? kClean : kFound;
}

int cmd_manipulate(const Common& c, const std::string& file, const std::string& kind_name,
                   int agent, bool all) {
  const Instance inst = parse_instance(slurp(file));
  require_profile(inst);
  const Domain d = inst.domain(enumeration_cap_from_env());
  const RuleSpec rule = RuleSpec::from_name(c.rule);
  const ExtensionKind ext = extension_from_name(c.extension);
  const ManipulationKind kind = manipulation_kind_from_name(kind_name);
  if (all && kind != ManipulationKind::General) {
    throw InvalidArgument("--all only applies to --kind general");
  }

  std::vector<ManipulationFinding> findings;
  std::string note;
  switch (kind) {
    case ManipulationKind::General:
      if (all) {
        findings = find_all_manipulations(rule, ext, d, inst.profile, agent);
      } else if (auto f = find_manipulation(rule, ext, d, inst.profile, agent)) {
        findings.push_back(std::move(*f));
      }
      break;
    case ManipulationKind::NoShow:
      if (auto f = find_noshow(rule, ext, d, inst.profile, agent)) findings.push_back(std::move(*f));
      break;
    case ManipulationKind::Antipodal: {
      auto r = find_antipodal(rule, ext, d, inst.profile, agent);
      if (!r.applicable) note = "antipodal judgment is not admissible";
      if (r.finding) findings.push_back(std::move(*r.finding));
      break;
    }
  }

  if (c.json) {
    ordered_json doc;
    doc["rule"] = rule.name();
    doc["extension"] = to_string(ext);
    doc["kind"] = to_string(kind);
    doc["agent"] = agent;
    auto& list = doc["findings"] = ordered_json::array();
    for (const auto& f : findings) list.push_back(finding_json(f));
    if (!note.empty()) doc["note"] = note;
    std::cout << doc.dump(2) << '\n';
  } else if (findings.empty()) {
    std::cout << "no " << to_string(kind) << " manipulation by agent " << agent << " under "
              << rule.name() << " (" << to_string(ext) << ")";
    if (!note.empty()) std::cout << ": " << note;
    std::cout << '\n';
  } else {
    for (const auto& f : findings) std::cout << f.str() << '\n';
  }
  return findings.empty() ? kClean : kFound;
}

int cmd_emit_asp(const Common& c, const std::string& file, bool manipulate, int agent) {
  if (!manipulate && agent != 0) throw InvalidArgument("--agent requires --manipulate");
  if (manipulate && !c.solver.empty()) {
    throw InvalidArgument("--solver cannot run the manipulation program (meta pipeline needed)");
  }
  const Instance inst = parse_instance(slurp(file));
  require_profile(inst);
  (void)inst.domain(enumeration_cap_from_env());
  const asp::Objective objective = objective_for(RuleSpec::from_name(c.rule));
  const asp::Scenario s = scenario_of(inst);

  const asp::Program prog = manipulate
                                ? asp::emit_manipulation_program(s, agent == 0 ? 1 : agent, objective)
                                : asp::emit_outcome_program(s, objective);
  if (c.solver.empty()) {
    std::cout << prog.text();
    return kClean;
  }
  // Solve and compare with the native rule instead of printing the program.
  const auto solved = asp::parse_answer_sets(asp::run_solver(c.solver, prog.text()), inst.agenda);
  const Outcome native = apply_rule(RuleSpec::from_name(c.rule),
                                    inst.domain(enumeration_cap_from_env()), inst.profile);
  const bool agree = solved == native.winners();
  if (c.json) {
    ordered_json doc;
    doc["solver_outcome"] = judgments_json(solved);
    doc["native_outcome"] = judgments_json(native.winners());
    doc["agrees"] = agree;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "solver: " << (solved.empty() ? "{}" : Outcome(solved).str())
              << "\nnative: " << native.str() << '\n'
              << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return agree ? kClean : kFound;
}

int cmd_gadget(const Common& c, const std::string& file, bool verify, bool isolated) {
  const ThreeCnf f = parse_dimacs(slurp(file));
  const GadgetInstance g = build_gadget(f);
  if (!verify) {
    std::cout << to_json(Instance{g.agenda, std::nullopt, g.profile});
    return kClean;
  }
  const GadgetReport r = verify_gadget(f, isolated, enumeration_cap_from_env());
  if (c.json) {
    ordered_json doc;
    doc["num_issues"] = r.num_issues;
    doc["profile_size"] = r.profile_size;
    doc["min_inequity"] = r.min_inequity;
    doc["minimiser"] = r.minimiser.str();
    doc["equidistant_exists"] = r.equidistant_exists;
    doc["one_in_three"] = r.one_in_three;
    if (r.assignment_distances) doc["assignment_distances"] = *r.assignment_distances;
    doc["consistent"] = r.consistent;
    doc["failures"] = r.failures;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << r.str() << '\n';
  }
  return r.consistent ? kClean : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact egalitarian judgment aggregation"};
  app.require_subcommand(1);
  Common c;

  auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--rule", c.rule, "maxham | maxeq | maxeq-lex")
        ->check(CLI::IsMember({"maxham", "maxeq", "maxeq-lex"}));
  };
  auto add_ext = [&](CLI::App* sub) {
    sub->add_option("--extension", c.extension, "pessimistic | optimistic | decisive")
        ->check(CLI::IsMember({"pessimistic", "optimistic", "decisive"}));
  };

  std::string file;
  bool show_breakdown = false;
  auto* outcome = app.add_subcommand("outcome", "Compute the rule's outcome on an instance");
  outcome->add_option("file", file, "instance file ('-' for stdin)")->required();
  add_rule(outcome);
  outcome->add_flag("--breakdown", show_breakdown, "per-candidate distance table");
  outcome->add_flag("--json", c.json);
  outcome->add_option("--solver", c.solver, "ASP solver executable for a cross-check");

  std::string axiom_name;
  int free_m = 0;
  std::size_t budget = SearchOptions{}.budget;
  bool ordered = false;
  auto* axiom = app.add_subcommand("axiom", "Search for an axiom violation");
  axiom->add_option("file", file, "instance file giving the domain");
  axiom->add_option("--free", free_m, "use the free domain over M issues")->check(CLI::Range(1, 20));
  axiom->add_option("--axiom", axiom_name,
                    "maximin | equity | majoritarian | sen-hammond | pigou-dalton | "
                    "strategyproofness | participation | antipodal-sp")
      ->required();
  add_rule(axiom);
  add_ext(axiom);
  axiom->add_option("--n-max", c.n_max, "largest profile size")->check(CLI::Range(1, 12));
  axiom->add_option("--budget", budget, "profile budget");
  axiom->add_flag("--ordered", ordered, "enumerate ordered profiles");
  axiom->add_flag("--json", c.json);

  std::string kind = "general";
  int agent = 0;
  bool all = false;
  auto* manip = app.add_subcommand("manipulate", "Look for a manipulation by one agent");
  manip->add_option("file", file, "instance file")->required();
  manip->add_option("--kind", kind, "general | no-show | antipodal")
      ->check(CLI::IsMember({"general", "no-show", "antipodal"}));
  manip->add_option("--agent", agent, "manipulating agent (1-based)")->required();
  add_rule(manip);
  add_ext(manip);
  manip->add_flag("--all", all, "list every successful report");
  manip->add_flag("--json", c.json);

  bool manipulate = false;
  auto* emit = app.add_subcommand("emit-asp", "Print the ASP encoding of an instance");
  emit->add_option("file", file, "instance file")->required();
  add_rule(emit);
  emit->add_flag("--manipulate", manipulate, "emit the manipulation program");
  emit->add_option("--agent", agent, "manipulating agent (1-based)");
  emit->add_option("--solver", c.solver, "solve and compare instead of printing");
  emit->add_flag("--json", c.json);

  bool verify = false;
  bool isolated = false;
  auto* gadget = app.add_subcommand("gadget", "Build the 1-in-3 hardness gadget from 3CNF");
  gadget->add_option("file", file, "DIMACS file")->required();
  gadget->add_flag("--verify", verify, "scan all judgments and check the construction");
  gadget->add_flag("--isolated", isolated,
                   "also require min inequity 2 when unsatisfiable (caller vouches)");
  gadget->add_flag("--json", c.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kError;
  }

  if (emit->parsed() && c.rule == "maxham" && emit->count("--rule") == 0) c.rule = "maxeq";

  try {
    if (outcome->parsed()) return cmd_outcome(c, file, show_breakdown);
    if (axiom->parsed()) return cmd_axiom(c, file, free_m, axiom_name, budget, ordered);
    if (manip->parsed()) return cmd_manipulate(c, file, kind, agent, all);
    if (emit->parsed()) return cmd_emit_asp(c, file, manipulate, agent);
    if (gadget->parsed()) return cmd_gadget(c, file, verify, isolated);
  } catch (const egal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
