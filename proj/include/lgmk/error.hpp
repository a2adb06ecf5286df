#pragma once

#include <stdexcept>
#include <string>

namespace lgmk {

// Categories double as CLI exit codes where one exists.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kNotAdmissible = 3,
  kGroupNotAdmissible = 4,
  kNotInvertible = 5,
  kResourceLimit = 6,
  kNotFiniteDimensional = 7,
  kInfiniteGroup = 8,
  kDegenerateRestriction = 9,
  kWeightCondition = 10,
  kTailProductTooLarge = 11,
  kInternal = 12,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParse, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lgmk
