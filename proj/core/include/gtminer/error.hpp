#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gtminer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller asked for something the interface does not support
/// (no inputs, empty filter, conflicting options).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed transcript markup. `line` is 1-based; `source` names the
/// file when known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
              detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// A CSV cell failed validation. `row` is the 1-based line number in the
/// file, `column` the 1-based column position.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t row, std::size_t column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// The CSV header does not satisfy the table contract.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An analysis was invoked with out-of-range parameters or unsuitable data.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtminer
