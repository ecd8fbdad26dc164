#pragma once

#include <stdexcept>
#include <string>

namespace hypersquare {

/// Invalid argument passed to a library operation (out-of-range vertex,
/// malformed config, repeated vertices where distinct ones are required).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition on the *structure* of the input does not hold,
/// e.g. an end-triple that is not an edge of the hypergraph.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A guard on search size or retries was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Building a composite structure failed; `stage` names the step.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// No unused absorber was available for `vertex`.
class AbsorptionError : public std::runtime_error {
 public:
  AbsorptionError(int vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// Malformed text input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hypersquare
