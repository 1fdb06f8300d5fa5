#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fockbound {

/// Failure categories shared by every module. The CLI maps them onto
/// process exit codes.
enum class ErrorCode {
  EmptyAmplitudes,
  ZeroNorm,
  NonFinite,
  InvalidArgument,
  Domain,
  Truncation,
  Parse,
  NonConvergence,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a Fock-space cutoff is too small for the requested state
/// or when a state carries too much weight at the top of the box.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double tail)
      : Error(ErrorCode::Truncation, what), tail_(tail) {}

  double tail() const noexcept { return tail_; }

 private:
  double tail_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fockbound
