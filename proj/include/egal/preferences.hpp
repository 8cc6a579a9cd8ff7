#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "egal/core.hpp"

namespace egal {

enum class Comparison { StrictlyBetter, Indifferent, StrictlyWorse };

/// Lifting of Hamming preferences from judgments to tie-sets.
///
///  - Pessimistic: X > Y iff some J' in Y is beaten by every J in X.
///  - Optimistic:  X > Y iff some J in X beats every J' in Y.
///  - Decisive:    X > Y iff some J in X beats some J' in Y and {J, J'} is
///                 not contained in the intersection of X and Y.
enum class ExtensionKind { Pessimistic, Optimistic, Decisive };

/// "pessimistic" | "optimistic" | "decisive". Throws InvalidArgument.
ExtensionKind extension_from_name(std::string_view name);
std::string to_string(ExtensionKind kind);

/// How an agent with judgment `truth` ranks `a` against `b`.
Comparison prefers(const Judgment& truth, const Judgment& a, const Judgment& b);

/// Strict set preference x > y for an agent holding `truth`.
bool set_prefers(ExtensionKind kind, const Judgment& truth, const Outcome& x, const Outcome& y);

/// First (J in x, J' in y) in canonical order with J beating J' and the pair
/// not inside x ∩ y. Under the decisive extension this is exactly the
/// certificate for x > y.
std::optional<std::pair<Judgment, Judgment>> decisive_witness(const Judgment& truth,
                                                              const Outcome& x,
                                                              const Outcome& y);

/// Checks the two consistency requirements every extension must meet on this
/// instance: singleton consistency, and that a strict set preference always
/// has a witnessing pair outside the intersection.
bool extension_contract_holds(ExtensionKind kind, const Judgment& truth, const Outcome& x,
                              const Outcome& y);

}  // namespace egal
