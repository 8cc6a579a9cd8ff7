#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two judgments (or a judgment and a profile) disagree on the number of issues.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range input (bad agent index, empty profile, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A constraint formula admits no judgment at all.
class InconsistentConstraint : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured issue cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, int cap) : Error(what), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// An exhaustive search would visit more profiles than its budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A table rule was queried on a profile it has no entry for.
class MissingTableEntry : public Error {
 public:
  using Error::Error;
};

/// Text input (formula, bitstring, DIMACS, solver output) failed to parse.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace egal
