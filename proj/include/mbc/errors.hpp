#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mbc {

enum class ErrorCode {
  kDegenerateBarrier,
  kOverlappingBarriers,
  kUnsortedInput,
  kInvalidRange,
  kEmptyInstance,
  kNonFinite,
  kNotLineConstrained,
  kUncoverable,
  kNumericalFailure,
  kNoFeasibleElement,
  kBadRankPermutation,
  kIndexOutOfRange,
  kTooLarge,
  kSpecInfeasible,
  kOracleDisagreement,
  kParse,
};

std::string_view to_string(ErrorCode code);

// True for the codes produced by instance validation and parsing.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mbc
