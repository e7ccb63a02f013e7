#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibconj {

enum class ErrorKind {
  AlphabetMismatch,
  InvalidArgument,
  NotAFixedPointSeed,
  NonGrowingSeed,
  PrimitivityRequired,
  UnreachableLetter,
  NotInLanguage,
  NotDecomposable,
  CertificateFailure,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code logic) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Grammar errors report the 0-based character offset of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fibconj
