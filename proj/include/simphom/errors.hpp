#pragma once

#include <stdexcept>
#include <string>

namespace simphom {

/// Base of every typed error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simplex or record that violates a structural rule (duplicate vertices, bad ids).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A node without a class label where one is required.
class MissingLabel : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose denominator is zero (empty stratum, empty group set).
class UndefinedScore : public Error {
 public:
  using Error::Error;
};

/// Bad on-disk data. Carries the offending file and 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string file = {}, std::size_t line = 0)
      : Error(format(what, file, line)), file_(std::move(file)), line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, const std::string& file, std::size_t line) {
    if (file.empty()) return what;
    if (line == 0) return file + ": " + what;
    return file + ":" + std::to_string(line) + ": " + what;
  }

  std::string file_;
  std::size_t line_;
};

/// Input that is well-formed but unusable for the requested operation (unsorted stream,
/// single-class training labels, no candidates).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace simphom
