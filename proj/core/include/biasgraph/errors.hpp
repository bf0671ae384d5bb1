#pragma once

#include <stdexcept>
#include <string>

namespace biasgraph {

// Bad input data or configuration: maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad function argument (caller bug rather than bad data file).
class ArgumentError : public ValidationError {
public:
    explicit ArgumentError(const std::string& msg) : ValidationError(msg) {}
};

// Malformed file content; carries the offending line when known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, long line)
        : ValidationError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Anything that goes wrong after inputs validated: maps to CLI exit code 2.
class RuntimeFailure : public std::runtime_error {
public:
    explicit RuntimeFailure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace biasgraph
