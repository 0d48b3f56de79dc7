#pragma once

#include <stdexcept>
#include <string>

namespace gtqft {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAGroupError : Error {
  using Error::Error;
};

struct EndpointMismatchError : Error {
  using Error::Error;
};

struct UnknownObjectError : Error {
  using Error::Error;
};

struct UnknownGeneratorError : Error {
  using Error::Error;
};

struct SourceMismatchError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct BoundaryMismatchError : Error {
  using Error::Error;
};

struct InvariantViolationError : Error {
  using Error::Error;
};

struct MismatchedPresentationsError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace gtqft
