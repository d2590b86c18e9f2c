#pragma once

#include <stdexcept>
#include <string>

namespace rcv {

/// Malformed or inconsistent input (bad file, invalid arguments). Maps to CLI
/// exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedBallot,
  CandidateOutOfRange,
  DuplicateCandidate,
  MissingTerminator,
  MalformedCandidate,
  MissingTitle,
  NonPositiveMultiplicity,
  UnknownCandidate,
  InvalidSeats,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail)
      : InputError("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// A precondition of a criterion check was not met by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tabulation or search could not complete (Meek non-convergence, enumeration
/// guard, oracle budget). Maps to CLI exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcv
