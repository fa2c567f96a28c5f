#pragma once

#include <stdexcept>
#include <string>

namespace depthforge {

/// Base of every error raised by the engine. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in ambient rings with different variable counts.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A quotient ring was requested for the unit ideal.
class ImproperIdeal : public Error {
public:
    ImproperIdeal() : Error("quotient ring is zero (unit ideal)") {}
    using Error::Error;
};

/// Construction parameters violate one of the admissibility inequalities.
class ConstraintViolation : public Error {
public:
    ConstraintViolation(std::string inequality, const std::string& detail)
        : Error("constraint violated: " + inequality + " (" + detail + ")"),
          inequality_(std::move(inequality)) {}

    const std::string& inequality() const noexcept { return inequality_; }

private:
    std::string inequality_;
};

/// A configured size guard was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Input breaks a documented precondition such as depth <= dim.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace depthforge
