#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afrc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the 1-based line number where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string origin, std::size_t line)
      : Error(origin + ":" + std::to_string(line) + ": " + message),
        origin_(std::move(origin)),
        line_(line) {}

  const std::string& origin() const { return origin_; }
  std::size_t line() const { return line_; }

 private:
  std::string origin_;
  std::size_t line_;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured capability guard (e.g. exact-transport
// degree limit). Distinct from ContractError so callers can map it to a
// dedicated exit code.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A derived artifact (curvature map) no longer matches the graph it was
// computed on.
class StalenessError : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis does not hold on the given graph, so the requested
// check is meaningless.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace afrc
