// Error types shared across the rispower library.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rispower {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad number, unknown unit suffix, trailing junk).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Value is syntactically fine but cannot be represented exactly in
/// integer microwatts (e.g. "0.0005 mW").
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// Value outside the permitted domain (negative power, zero duration,
/// unknown catalog key, empty input list).
class DomainError : public Error {
public:
  using Error::Error;
};

/// 64-bit unsigned arithmetic would wrap.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// A serialized document violates the expected schema. `path()` names the
/// offending field, e.g. "control_board.rated_power" or
/// "segments[0].cells[12]".
class SchemaError : public Error {
public:
  SchemaError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

/// One violated invariant found while validating a descriptor or coding
/// state. `field` is a dotted path into the offending structure.
struct ValidationIssue {
  std::string field;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

/// Carries every violation found, not just the first.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<ValidationIssue> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
  static std::string join(const std::vector<ValidationIssue>& issues) {
    std::string text;
    for (const auto& issue : issues) {
      if (!text.empty()) text += "; ";
      if (!issue.field.empty()) {
        text += issue.field;
        text += ": ";
      }
      text += issue.message;
    }
    return text.empty() ? std::string("validation failed") : text;
  }

  std::vector<ValidationIssue> issues_;
};

}  // namespace rispower
