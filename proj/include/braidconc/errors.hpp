#pragma once

#include <stdexcept>
#include <string>

namespace bc {

// Process exit codes used by the CLI; exceptions carry the matching code so
// main() can translate uniformly.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_CHECK_FAILED = 1,  // verification/acceptance assertion failed
    EXIT_PARSE = 2,         // malformed input text
    EXIT_RANGE = 3,         // parameter outside its documented range
    EXIT_DOMAIN = 4,        // structurally valid input outside an op's domain
    EXIT_PRECISION = 5,     // numeric result could not be certified
};

class Error : public std::runtime_error {
  public:
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), code_(code) {}
    int exit_code() const { return code_; }

  private:
    int code_;
};

// Malformed text input (braid grammar, config files). Carries a position.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")",
                EXIT_PARSE),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// Parameter outside its documented range (generator index, strand count, ...).
class RangeError : public Error {
  public:
    explicit RangeError(const std::string& msg) : Error(msg, EXIT_RANGE) {}
};

// Valid object, wrong domain: non-knot closure, strand mismatch, bad witness.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg, EXIT_DOMAIN) {}
};

class NotAKnot : public DomainError {
  public:
    explicit NotAKnot(const std::string& msg) : DomainError(msg) {}
};

// Levine-Tristram form is singular at the requested omega.
class DegenerateOmega : public DomainError {
  public:
    explicit DegenerateOmega(const std::string& msg) : DomainError(msg) {}
};

// An eigenvalue sign (or similar numeric fact) could not be certified at the
// configured tolerance. Always preferable to a silently wrong integer.
class PrecisionFailure : public Error {
  public:
    explicit PrecisionFailure(const std::string& msg) : Error(msg, EXIT_PRECISION) {}
};

}  // namespace bc
