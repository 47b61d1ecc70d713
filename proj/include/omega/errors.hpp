#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace omega {

enum class ErrorKind {
    InvalidProblem,
    NegativeRhs,
    AllRhsZero,
    SizeLimitExceeded,
    NoPositiveD2,
    DivisionByZeroD2,
    NegativeD2,
    InfeasibleVertexBug,
    InvariantBreach,
    ValueNotPositive,
    NotAProbabilityVector,
    TooLarge,
    ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the condition;
/// parse errors additionally carry a 1-based source position.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    Error(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

}  // namespace omega
