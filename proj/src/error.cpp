#include "curio/error.hpp"

namespace curio {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kClearanceViolation: return "ClearanceViolation";
    case ErrorCode::kNotRecipient:       return "NotRecipient";
    case ErrorCode::kSelfTransfer:       return "SelfTransfer";
    case ErrorCode::kNotHolder:          return "NotHolder";
    case ErrorCode::kLevelMismatch:      return "LevelMismatch";
    case ErrorCode::kMissingDisclosure:  return "MissingDisclosure";
    case ErrorCode::kEmptyInput:         return "EmptyInput";
    case ErrorCode::kInvalidScenario:    return "InvalidScenario";
    case ErrorCode::kParseError:         return "ParseError";
    case ErrorCode::kDecodeError:        return "DecodeError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string field)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      field_(std::move(field)) {}

}  // namespace curio
