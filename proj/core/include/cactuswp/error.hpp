#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cactuswp {

enum class ErrorCode {
  kParse,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kEmptyGraph,
  kNotConnected,
  kNotCactus,
  kNotApplicable,
  kInvalidSpec,
  kInvalidParams,
  kTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cactuswp
