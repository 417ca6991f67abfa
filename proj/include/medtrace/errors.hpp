#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace medtrace {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain rule was violated: invalid configuration, duplicate identifier,
/// degenerate input, out-of-range value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An input file is syntactically invalid. Carries a 1-based line number
/// when the format is line-oriented (0 when not applicable).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Payload-level data is undecodable or unusable (bad hex, empty sample set).
class MalformedDataError : public Error {
 public:
  using Error::Error;
};

/// An advertisement payload violates the length-type-value layout.
class MalformedError : public MalformedDataError {
 public:
  MalformedError(std::size_t offset, const std::string& reason)
      : MalformedDataError("offset " + std::to_string(offset) + ": " + reason),
        offset_(offset),
        reason_(reason) {}

  std::size_t offset() const { return offset_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace medtrace
