#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egal/asp.hpp"
#include "egal/axioms.hpp"
#include "egal/gadgets.hpp"
#include "egal/instance.hpp"
#include "egal/manipulation.hpp"
#include "egal/rules.hpp"

namespace py = pybind11;
using namespace egal;

namespace {

using Bits = std::vector<std::string>;

Bits bits(const Outcome& o) {
  Bits out;
  for (const auto& j : o) out.push_back(j.str());
  return out;
}

Bits bits(const Profile& p) {
  Bits out;
  for (const auto& j : p) out.push_back(j.str());
  return out;
}

Domain domain_of(const Bits& domain, int free) {
  if (!domain.empty() && free > 0) throw InvalidArgument("give either a domain or free=m, not both");
  if (free > 0) return Domain::free(free);
  return Domain::parse(domain);
}

SearchOptions options(int n_max, int n_min, bool ordered, long budget) {
  SearchOptions o;
  o.n_max = n_max;
  o.n_min = n_min;
  o.ordered = ordered;
  o.budget = static_cast<std::size_t>(budget);
  return o;
}

py::object finding_dict(const std::optional<ManipulationFinding>& f) {
  if (!f) return py::none();
  py::dict d;
  d["kind"] = to_string(f->kind);
  d["agent"] = f->manipulator;
  d["profile"] = bits(f->profile);
  d["report"] = f->untruthful ? py::cast(f->untruthful->str()) : py::none();
  d["before"] = bits(f->before);
  d["after"] = bits(f->after);
  if (f->witness) d["witness"] = py::make_tuple(f->witness->first.str(), f->witness->second.str());
  d["description"] = f->str();
  return std::move(d);
}

py::dict report_dict(const AxiomReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["holds"] = r.holds();
  d["profiles_searched"] = r.profiles_searched;
  if (r.witness) {
    py::dict w;
    w["profile"] = bits(r.witness->profile);
    Bits js;
    for (const auto& j : r.witness->judgments) js.push_back(j.str());
    w["judgments"] = js;
    w["agents"] = r.witness->agents;
    w["description"] = r.witness->description;
    d["witness"] = w;
  }
  d["finding"] = finding_dict(r.finding);
  d["text"] = r.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_egal, m) {
  m.doc() = "Exact egalitarian judgment aggregation";

  auto base = py::register_exception<Error>(m, "EgalError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  m.def("hamming", [](const std::string& a, const std::string& b) {
    return hamming(Judgment::parse(a), Judgment::parse(b));
  });

  m.def(
      "outcome",
      [](const Bits& profile, const Bits& domain, int free, const std::string& rule) {
        return bits(apply_rule(RuleSpec::from_name(rule), domain_of(domain, free), Profile::parse(profile)));
      },
      py::arg("profile"), py::arg("domain") = Bits{}, py::arg("free") = 0, py::arg("rule") = "maxham");

  m.def(
      "instance_outcome",
      [](const std::string& json_text, const std::string& rule) {
        const Instance inst = parse_instance(json_text);
        return bits(apply_rule(RuleSpec::from_name(rule), inst.domain(enumeration_cap_from_env()), inst.profile));
      },
      py::arg("instance_json"), py::arg("rule") = "maxham");

  m.def(
      "check_axiom",
      [](const std::string& axiom, const std::string& rule, const Bits& domain, int free,
         const std::string& extension, int n_max, int n_min, bool ordered, long budget) {
        const Domain d = domain_of(domain, free);
        const RuleSpec r = RuleSpec::from_name(rule);
        const SearchOptions o = options(n_max, n_min, ordered, budget);
        // Strategic properties live with the manipulation searches.
        try {
          return report_dict(check_axiom(axiom_from_name(axiom), r, d, o));
        } catch (const InvalidArgument&) {
          return report_dict(check_rule(rule_property_from_name(axiom), r, extension_from_name(extension), d, o));
        }
      },
      py::arg("axiom"), py::arg("rule") = "maxham", py::arg("domain") = Bits{}, py::arg("free") = 0,
      py::arg("extension") = "decisive", py::arg("n_max") = 3, py::arg("n_min") = 1,
      py::arg("ordered") = false, py::arg("budget") = 200000);

  m.def(
      "find_manipulation",
      [](const std::string& kind, const Bits& profile, int agent, const Bits& domain, int free,
         const std::string& rule, const std::string& extension) -> py::object {
        const Domain d = domain_of(domain, free);
        const RuleSpec r = RuleSpec::from_name(rule);
        const ExtensionKind e = extension_from_name(extension);
        const Profile p = Profile::parse(profile);
        switch (manipulation_kind_from_name(kind)) {
          case ManipulationKind::General: return finding_dict(find_manipulation(r, e, d, p, agent));
          case ManipulationKind::NoShow: return finding_dict(find_noshow(r, e, d, p, agent));
          case ManipulationKind::Antipodal: {
            const AntipodalResult a = find_antipodal(r, e, d, p, agent);
            if (!a.applicable) throw InvalidArgument("antipodal report is outside the domain");
            return finding_dict(a.finding);
          }
        }
        return py::none();
      },
      py::arg("kind"), py::arg("profile"), py::arg("agent"), py::arg("domain") = Bits{},
      py::arg("free") = 0, py::arg("rule") = "maxham", py::arg("extension") = "decisive");

  m.def(
      "emit_asp",
      [](const std::string& json_text, const std::string& rule, int manipulator) {
        const RuleSpec r = RuleSpec::from_name(rule);
        asp::Objective obj = asp::Objective::MaxEq;
        if (r.kind() == RuleSpec::Kind::MaxEqThenMaxHam) {
          obj = asp::Objective::MaxEqThenMaxHam;
        } else if (r.kind() != RuleSpec::Kind::MaxEq) {
          throw InvalidArgument("ASP encodings exist for maxeq and maxeq-lex only");
        }
        const Instance inst = parse_instance(json_text);
        const asp::Scenario s{inst.agenda, inst.explicit_domain, inst.profile};
        return manipulator > 0 ? asp::emit_manipulation_program(s, manipulator, obj).text()
                               : asp::emit_outcome_program(s, obj).text();
      },
      py::arg("instance_json"), py::arg("rule") = "maxeq", py::arg("manipulator") = 0);

  m.def(
      "gadget",
      [](const std::string& dimacs) {
        const GadgetInstance g = build_gadget(parse_dimacs(dimacs));
        py::dict d;
        d["issues"] = g.agenda.issues();
        d["profile"] = bits(g.profile);
        Bits origin;
        for (const auto& o : g.provenance) origin.push_back(o.str());
        d["origin"] = origin;
        return d;
      },
      py::arg("dimacs"));

  m.def(
      "verify_gadget",
      [](const std::string& dimacs, bool isolated) {
        const GadgetReport r = verify_gadget(parse_dimacs(dimacs), isolated);
        py::dict d;
        d["issues"] = r.num_issues;
        d["min_inequity"] = r.min_inequity;
        d["equidistant_exists"] = r.equidistant_exists;
        d["one_in_three"] = r.one_in_three;
        d["consistent"] = r.consistent;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("dimacs"), py::arg("isolated") = false);
}
