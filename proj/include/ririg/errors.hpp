#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ririg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table entry or index outside the universe.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        std::string out = "line " + std::to_string(line);
        if (column != 0) out += ", column " + std::to_string(column);
        return out + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An exhaustive scan would exceed its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Formulas or algebras disagree on the modal symbols in play.
class SignatureMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition on the input algebra or object failed (not a filter, not in R_C(I), ...).
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

}  // namespace ririg
