#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based; `field` names the offending
/// section or token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + " (" + field + "): " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration ran past its configured work cap.
class WorkCapExceeded : public Error {
 public:
  explicit WorkCapExceeded(unsigned long long cap)
      : Error("work cap of " + std::to_string(cap) + " steps exceeded"), cap_(cap) {}
  unsigned long long cap() const { return cap_; }

 private:
  unsigned long long cap_;
};

/// The naive enumerator refused an instance whose assignment space is larger
/// than its cap.
class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace xmod
