#include "spaceform/error.hpp"

namespace spaceform {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::AntipodalError: return "AntipodalError";
    case ErrorKind::DegenerateError: return "DegenerateError";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::CollinearError: return "CollinearError";
    case ErrorKind::NoCircumcircle: return "NoCircumcircle";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotInHemisphere: return "NotInHemisphere";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::SideTooLong: return "SideTooLong";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::FrakEInconsistent: return "FrakEInconsistent";
    case ErrorKind::InvalidFrakE: return "InvalidFrakE";
    case ErrorKind::ChordTooLong: return "ChordTooLong";
    case ErrorKind::ConvexityViolated: return "ConvexityViolated";
    case ErrorKind::RadiusOverflow: return "RadiusOverflow";
    case ErrorKind::DegenerateTheta: return "DegenerateTheta";
    case ErrorKind::ToleranceExceeded: return "ToleranceExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Error";
}

} // namespace spaceform
