#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rredux {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed CSV structure (ragged rows, bad quoting).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Header-level problems: duplicate names, empty input, too few columns.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Cell-level problems: missing values, non-numeric cells in numeric columns.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Caller passed an argument outside the operation's precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace rredux
