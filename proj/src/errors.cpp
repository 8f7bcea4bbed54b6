#include "circlecheb/errors.hpp"

namespace circlecheb {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::InvalidAngle: return "InvalidAngle";
        case ErrorCode::PoleHit: return "PoleHit";
        case ErrorCode::ConvexityViolation: return "ConvexityViolation";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::InsufficientResolution: return "InsufficientResolution";
    }
    return "Unknown";
}

}  // namespace circlecheb
