#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curio {

enum class ErrorCode {
  kClearanceViolation,
  kNotRecipient,
  kSelfTransfer,
  kNotHolder,
  kLevelMismatch,
  kMissingDisclosure,
  kEmptyInput,
  kInvalidScenario,
  kParseError,
  kDecodeError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above.
// `field` names the offending scenario field or input location when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace curio
