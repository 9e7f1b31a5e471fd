#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipmkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input values or malformed requests. CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed document; remembers where parsing failed (line is 1-based,
// 0 when unknown; field names the offending column or key).
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::string field = {})
        : ValidationError(annotate(message, line, field)), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string annotate(const std::string& message, std::size_t line,
                                const std::string& field) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += "field '" + field + "': ";
        return out + message;
    }

    std::size_t line_;
    std::string field_;
};

// Numerical failures. CLI exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

// The linear system could not be solved; pivot_index names the column whose
// pivot fell below tolerance.
class SingularSystemError : public NumericalError {
public:
    SingularSystemError(const std::string& message, std::size_t pivot_index)
        : NumericalError(message + " (pivot column " + std::to_string(pivot_index) + ")"),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

// A requested parameter has no influence on the model (its coefficient is
// numerically zero), so inversion is impossible.
class NoLeverageError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Filesystem failures. CLI exit code 3.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ipmkit
