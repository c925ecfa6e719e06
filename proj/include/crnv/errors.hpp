#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crnv {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes, so new error kinds should derive from the closest match.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or input violates a documented precondition (n > m+1, p >= 1, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed or schema-violating input document (network JSON, scripts, predicates).
class SchemaError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DisabledReactionError : public Error {
public:
    using Error::Error;
};

class BatchTooLargeError : public Error {
public:
    using Error::Error;
};

/// The network does not have the Z0..Zn, B, R species layout of the N1/N2 family.
class LayoutError : public Error {
public:
    using Error::Error;
};

class IncompleteGraphError : public Error {
public:
    using Error::Error;
};

class UnreachableStateError : public Error {
public:
    using Error::Error;
};

class ScriptStepDisabledError : public Error {
public:
    ScriptStepDisabledError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}

    /// Zero-based index of the offending script entry.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvalidLassoError : public Error {
public:
    using Error::Error;
};

/// Step-size underflow or a concentration that went negative beyond tolerance.
class IntegrationError : public Error {
public:
    using Error::Error;
};

} // namespace crnv
