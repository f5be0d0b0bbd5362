#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sccpref {

// An argument or set referenced something outside the framework it was used with.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("deadline exceeded") {}
};

// Brute-force enumeration refused because the framework exceeds the configured bound.
class OracleBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sccpref
