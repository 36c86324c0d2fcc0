#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skossim {

/// Base class for every data/input error raised by the library. The CLI maps
/// these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error at a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// Semantically invalid input that parsed fine.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace skossim
