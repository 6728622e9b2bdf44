#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

/// Error taxonomy mirrored by the CLI exit codes:
/// domain failures -> 1, inconclusive bounded procedures -> 2,
/// parse/usage problems -> 3.
enum class ErrorKind { Domain = 1, Inconclusive = 2, Usage = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error("[" + stage + "] " + message),
        kind_(kind),
        stage_(std::move(stage)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }
  int exit_code() const { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
  std::string stage_;
};

struct DomainError : Error {
  DomainError(std::string stage, const std::string& message)
      : Error(ErrorKind::Domain, std::move(stage), message) {}
};

struct InconclusiveError : Error {
  InconclusiveError(std::string stage, const std::string& message)
      : Error(ErrorKind::Inconclusive, std::move(stage), message) {}
};

struct UsageError : Error {
  UsageError(std::string stage, const std::string& message)
      : Error(ErrorKind::Usage, std::move(stage), message) {}
};

/// Syntax error with a position into the offending text.
class ParseError : public Error {
public:
  ParseError(std::string stage, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(ErrorKind::Usage, std::move(stage),
              message + " at line " + std::to_string(line) + ", column " +
                  std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lnd
