#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gw {

enum class ErrorCode {
    DegenerateSimplex,
    VertexOutOfRange,
    TooFewVertices,
    ResolutionTooSmall,
    BadAxis,
    ArcTooShort,
    EmptyRelator,
    BadWord,
    NotASubcomplex,
    NotConnected,
    InvalidLabeling,
    MissingLabels,
    BadField,
    BadFormat,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type;
/// `code()` identifies the condition so callers (and tests) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gw
