#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phantom {

enum class ErrorKind {
  Validation,
  Parse,
  Io,
  Precondition,
  UndefinedStatistic,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Invariant violation on a named field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(ErrorKind::Validation, field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Malformed input document. line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error(ErrorKind::Parse, format(line, field, message)), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& message) {
    std::string out = line > 0 ? "line " + std::to_string(line) : std::string();
    if (!field.empty()) out += out.empty() ? field : " (" + field + ")";
    return out.empty() ? message : out + ": " + message;
  }
  std::size_t line_;
  std::string field_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& message)
      : Error(ErrorKind::Io, path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error(ErrorKind::Precondition, message) {}
};

// A statistic that has no value for the given inputs (e.g. t-test on two constant, equal samples).
class UndefinedStatistic : public Error {
 public:
  explicit UndefinedStatistic(const std::string& message) : Error(ErrorKind::UndefinedStatistic, message) {}
};

}  // namespace phantom
