#pragma once

#include <stdexcept>
#include <string>

namespace spaceform {

// Structured failure categories used across the library. Geometry errors are
// recoverable conditions (bad input, degenerate configuration), not bugs.
enum class ErrorKind {
    PoleError,
    DomainError,
    InvalidPoint,
    AntipodalError,
    DegenerateError,
    NotATriangle,
    CollinearError,
    NoCircumcircle,
    EmptyInput,
    NotInHemisphere,
    NotConvex,
    SideTooLong,
    TooFewVertices,
    DuplicateVertex,
    RadiusTooLarge,
    GenerationFailed,
    FrakEInconsistent,
    InvalidFrakE,
    ChordTooLong,
    ConvexityViolated,
    RadiusOverflow,
    DegenerateTheta,
    ToleranceExceeded,
    InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace spaceform
