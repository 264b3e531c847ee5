#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assocnb {

enum class ErrorCode {
  invalid_argument,
  invalid_support,
  empty_database,
  no_features,
  unknown_category,
  empty_document,
  missing_root,
  unreadable_file,
  no_categories,
  bad_magic,
  parse_error,
  version_mismatch,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every error the library raises. The code is stable and is what
/// the command-line tool maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed line in one of the text formats. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse_error,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace assocnb
