#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atomfol {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input (files, headers, mismatched line counts).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised by the formula parser. `position` is a byte offset into the text.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(std::string(kind == Kind::Syntax ? "syntax" : "semantic") +
              " error at " + std::to_string(position) + ": " + what),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace atomfol
