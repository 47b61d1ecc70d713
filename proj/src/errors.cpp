#include "omega/errors.hpp"

namespace omega {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::NegativeRhs: return "NegativeRhs";
    case ErrorKind::AllRhsZero: return "AllRhsZero";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NoPositiveD2: return "NoPositiveD2";
    case ErrorKind::DivisionByZeroD2: return "DivisionByZeroD2";
    case ErrorKind::NegativeD2: return "NegativeD2";
    case ErrorKind::InfeasibleVertexBug: return "InfeasibleVertexBug";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
    case ErrorKind::ValueNotPositive: return "ValueNotPositive";
    case ErrorKind::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      kind_(kind),
      line_(line),
      column_(column)
{
}

}  // namespace omega
