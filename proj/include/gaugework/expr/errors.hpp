#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaugework::expr {

enum class ExprErrorKind {
    UnknownSymbol,
    SyntaxError,
    DivisionByZeroLiteral,
    IdenticallyZeroDenominator,
    DenominatorVanishesAtPoint,
    UnboundSymbol,
};

const char* to_string(ExprErrorKind kind);

class ExprError : public std::runtime_error {
public:
    ExprError(ExprErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ExprErrorKind kind() const { return kind_; }

private:
    ExprErrorKind kind_;
};

/// Parser failure with a 0-based character offset into the input.
class ParseError : public ExprError {
public:
    ParseError(ExprErrorKind kind, std::size_t position, const std::string& message)
        : ExprError(kind, message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace gaugework::expr
