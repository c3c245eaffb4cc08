#pragma once

#include <stdexcept>
#include <string>

namespace sumeval {

// Error taxonomy shared across the library. The CLI maps these onto process
// exit codes: UsageError -> 1, data/validation errors -> 2, external-tool and
// protocol errors -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller misuse: bad arguments, bad flags, preconditions violated.
class UsageError : public Error {
public:
    using Error::Error;
};

// A MetricsDict or record violates its structural contract.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Instance or record data violates a model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed on-disk input. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// The data is well-formed but cannot support the requested operation.
class DataError : public Error {
public:
    using Error::Error;
};

// An external command failed (nonzero exit, spawn failure).
class ExternalMetricError : public Error {
public:
    using Error::Error;
};

// An external command exceeded its time budget.
class TimeoutError : public ExternalMetricError {
public:
    using ExternalMetricError::ExternalMetricError;
};

// An external command produced output violating the file protocol.
class ProtocolError : public Error {
public:
    using Error::Error;
};

}  // namespace sumeval
