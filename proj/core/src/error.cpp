#include "cactuswp/error.hpp"

namespace cactuswp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotCactus: return "NotCactus";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace cactuswp
