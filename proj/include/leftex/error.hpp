#ifndef LEFTEX_ERROR_HPP
#define LEFTEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace leftex {

// Numeric values are mirrored by leftex_status in leftex.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  Parse = 2,
  AlphabetMismatch = 3,
  SymbolOutOfRange = 4,
  NotNumberLike = 5,
  EmptyInterval = 6,
  IncompleteTable = 7,
  OutOfRange = 8,
  SeedTooShort = 9,
  TableTooLarge = 10,
  NotPositive = 11,
  BadBase = 12,
  BadSpec = 13,
  BadDims = 14,
  IncompatibleRule = 15,
  NotECA = 16,
  ZeroNotQuiescent = 17,
  PrefixTooShort = 18,
  InsufficientHorizon = 19,
  PreconditionFailed = 20,
  PaletteIncomplete = 21,
  NonBinaryForPBM = 22,
  Io = 23,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leftex

#endif  // LEFTEX_ERROR_HPP
