#include "groupwidth/error.hpp"

namespace gw {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
    case ErrorCode::BadAxis: return "BadAxis";
    case ErrorCode::ArcTooShort: return "ArcTooShort";
    case ErrorCode::EmptyRelator: return "EmptyRelator";
    case ErrorCode::BadWord: return "BadWord";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

}  // namespace gw
