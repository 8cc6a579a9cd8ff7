#include "egal/instance.hpp"

#include <cstdlib>

#include "json.hpp"

namespace egal {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> string_list(const ordered_json& doc, const char* key) {
  const auto& node = doc.at(key);
  if (!node.is_array()) throw InvalidArgument(std::string("'") + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw InvalidArgument(std::string("'") + key + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

void check_widths(const std::vector<std::string>& bits, int m, const char* what) {
  for (const auto& b : bits) {
    if (static_cast<int>(b.size()) != m) {
      throw DimensionError(std::string(what) + " member '" + b + "' has length " +
                           std::to_string(b.size()) + ", expected " + std::to_string(m));
    }
  }
}

}  // namespace

Domain Instance::domain(int cap) const {
  Domain d = explicit_domain ? *explicit_domain : enumerate_domain(agenda, cap);
  if (!profile.empty()) d.check_profile(profile);
  return d;
}

Instance parse_instance(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw InvalidArgument("instance must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "issues" && key != "constraint" && key != "domain" && key != "profile") {
      throw InvalidArgument("unknown instance field '" + key + "'");
    }
  }
  if (!doc.contains("issues")) throw InvalidArgument("instance needs 'issues'");
  const bool has_constraint = doc.contains("constraint") && !doc["constraint"].is_null();
  const bool has_domain = doc.contains("domain") && !doc["domain"].is_null();
  if (has_constraint && has_domain) {
    throw InvalidArgument("give either 'constraint' or 'domain', not both");
  }

  std::optional<Formula> constraint;
  if (has_constraint) {
    if (!doc["constraint"].is_string()) throw InvalidArgument("'constraint' must be a string");
    constraint = parse_formula(doc["constraint"].get<std::string>());
  }
  Agenda agenda(string_list(doc, "issues"), std::move(constraint));
  const int m = agenda.size();

  std::optional<Domain> domain;
  if (has_domain) {
    const auto bits = string_list(doc, "domain");
    check_widths(bits, m, "domain");
    domain = Domain::parse(bits);
  }
  Profile profile;
  if (doc.contains("profile")) {
    const auto bits = string_list(doc, "profile");
    check_widths(bits, m, "profile");
    profile = Profile::parse(bits);
  }
  if (domain && !profile.empty()) domain->check_profile(profile);
  if (!domain && agenda.constraint() && !profile.empty()) {
    const CompiledFormula ok(*agenda.constraint(), agenda);
    for (const auto& j : profile) {
      if (!ok(j)) throw InvalidArgument("profile judgment " + j.str() + " violates the constraint");
    }
  }
  return Instance{std::move(agenda), std::move(domain), std::move(profile)};
}

std::string to_json(const Instance& inst) {
  ordered_json doc;
  doc["issues"] = inst.agenda.issues();
  if (inst.agenda.constraint()) doc["constraint"] = to_string(*inst.agenda.constraint());
  if (inst.explicit_domain) {
    auto& list = doc["domain"] = ordered_json::array();
    for (const auto& j : *inst.explicit_domain) list.push_back(j.str());
  }
  auto& list = doc["profile"] = ordered_json::array();
  for (const auto& j : inst.profile) list.push_back(j.str());
  return doc.dump(2) + "\n";
}

int enumeration_cap_from_env() {
  const char* raw = std::getenv("EGAL_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumCap;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > Judgment::kMaxWidth) {
    throw InvalidArgument(std::string("EGAL_ENUM_CAP must be an integer in 1..63, got '") + raw +
                          "'");
  }
  return static_cast<int>(v);
}

}  // namespace egal
