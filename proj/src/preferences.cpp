#include "egal/preferences.hpp"

#include <algorithm>

namespace egal {

ExtensionKind extension_from_name(std::string_view name) {
  if (name == "pessimistic") return ExtensionKind::Pessimistic;
  if (name == "optimistic") return ExtensionKind::Optimistic;
  if (name == "decisive") return ExtensionKind::Decisive;
  throw InvalidArgument("unknown extension '" + std::string(name) +
                        "' (expected pessimistic, optimistic or decisive)");
}

std::string to_string(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::Pessimistic: return "pessimistic";
    case ExtensionKind::Optimistic: return "optimistic";
    case ExtensionKind::Decisive: return "decisive";
  }
  return "?";
}

Comparison prefers(const Judgment& truth, const Judgment& a, const Judgment& b) {
  const int da = hamming(truth, a);
  const int db = hamming(truth, b);
  if (da < db) return Comparison::StrictlyBetter;
  if (da > db) return Comparison::StrictlyWorse;
  return Comparison::Indifferent;
}

namespace {

bool beats(const Judgment& truth, const Judgment& a, const Judgment& b) {
  return prefers(truth, a, b) == Comparison::StrictlyBetter;
}

}  // namespace

std::optional<std::pair<Judgment, Judgment>> decisive_witness(const Judgment& truth,
                                                              const Outcome& x,
                                                              const Outcome& y) {
  for (const auto& j : x) {
    for (const auto& jp : y) {
      if (!beats(truth, j, jp)) continue;
      const bool both_shared = x.contains(jp) && y.contains(j);
      // j ∈ x and jp ∈ y already; the pair sits in x ∩ y iff j ∈ y and jp ∈ x.
      if (!both_shared) return std::pair{j, jp};
    }
  }
  return std::nullopt;
}

bool set_prefers(ExtensionKind kind, const Judgment& truth, const Outcome& x, const Outcome& y) {
  switch (kind) {
    case ExtensionKind::Pessimistic:
      return std::any_of(y.begin(), y.end(), [&](const Judgment& jp) {
        return std::all_of(x.begin(), x.end(),
                           [&](const Judgment& j) { return beats(truth, j, jp); });
      });
    case ExtensionKind::Optimistic:
      return std::any_of(x.begin(), x.end(), [&](const Judgment& j) {
        return std::all_of(y.begin(), y.end(),
                           [&](const Judgment& jp) { return beats(truth, j, jp); });
      });
    case ExtensionKind::Decisive:
      return decisive_witness(truth, x, y).has_value();
  }
  return false;
}

bool extension_contract_holds(ExtensionKind kind, const Judgment& truth, const Outcome& x,
                              const Outcome& y) {
  // Singleton consistency on every pair drawn from x and y.
  for (const Outcome* set : {&x, &y}) {
    for (const auto& a : *set) {
      for (const auto& b : x) {
        if (set_prefers(kind, truth, Outcome{a}, Outcome{b}) != beats(truth, a, b)) return false;
      }
      for (const auto& b : y) {
        if (set_prefers(kind, truth, Outcome{a}, Outcome{b}) != beats(truth, a, b)) return false;
      }
    }
  }
  if (set_prefers(kind, truth, x, y) && !decisive_witness(truth, x, y)) return false;
  return true;
}

}  // namespace egal
