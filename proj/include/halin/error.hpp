#pragma once

#include <stdexcept>
#include <string>

namespace halin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force routine was asked to work on an instance larger than its budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed text input (edge lists, certificates, descriptors).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace halin
