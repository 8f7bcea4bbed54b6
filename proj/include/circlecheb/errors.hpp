#pragma once

#include <stdexcept>
#include <string>

namespace circlecheb {

enum class ErrorCode {
    EmptySet,
    InvalidAngle,
    PoleHit,
    ConvexityViolation,
    StepTooLarge,
    OutOfDomain,
    OrderTooSmall,
    OrderViolation,
    Degenerate,
    InsufficientResolution,
};

const char* to_string(ErrorCode code);

class CircleError : public std::runtime_error {
public:
    CircleError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace circlecheb
