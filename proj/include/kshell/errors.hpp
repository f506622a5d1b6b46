#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kshell {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument lies outside the operation's domain (unknown node, size mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A stated precondition of the operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A previously validated decision no longer matches the current graph state.
class ConflictError : public Error {
public:
    using Error::Error;
};

/// A loaded dataset does not match its expected summary statistics.
class VersionMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace kshell
