#pragma once

#include <stdexcept>
#include <string>

namespace tselect {

// Broad failure classes. The command-line driver maps these to exit codes,
// so every error thrown by the library must pick one.
enum class ErrorKind {
  Syntax,             // malformed input text
  Validation,         // well-formed text violating a static rule
  Budget,             // normalization term budget exceeded
  Cap,                // enumeration or oracle size cap exceeded
  EmptyDomain,        // component domain empty under composition
  NotNormalized,      // operation requires union-of-tensor form
  NotAdequate,        // minimality check on a non-adequate set
  OutsideDomain,      // test point violates the instance constraint
  Internal,           // precondition broken by the caller
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// 1-based position inside an input document.
struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(ErrorKind::Syntax,
              std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                  ": " + message),
        pos_(pos) {}

  ParseError(ErrorKind kind, SourcePos pos, const std::string& message)
      : Error(kind, std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                        ": " + message),
        pos_(pos) {}

  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

}  // namespace tselect
