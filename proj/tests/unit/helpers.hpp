#pragma once

#include <string>
#include <vector>

#include "egal/core.hpp"

namespace testing_helpers {

inline egal::Judgment J(const std::string& s) { return egal::Judgment::parse(s); }

inline egal::Profile P(const std::vector<std::string>& s) { return egal::Profile::parse(s); }

inline egal::Domain D(const std::vector<std::string>& s) { return egal::Domain::parse(s); }

inline egal::Outcome O(const std::vector<std::string>& s) { return egal::Outcome::parse(s); }

inline std::vector<std::string> bits(const egal::Outcome& o) {
  std::vector<std::string> out;
  for (const auto& j : o) out.push_back(j.str());
  return out;
}

inline std::vector<std::string> bits(const egal::Domain& d) {
  std::vector<std::string> out;
  for (const auto& j : d) out.push_back(j.str());
  return out;
}

inline std::vector<std::string> bits(const egal::Profile& p) {
  std::vector<std::string> out;
  for (const auto& j : p) out.push_back(j.str());
  return out;
}

}  // namespace testing_helpers
