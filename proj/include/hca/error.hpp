#pragma once

#include <stdexcept>
#include <string>

namespace hca {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration (parameters, schema, partition counts).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Unreadable or malformed input data.
class InputError : public Error {
public:
    using Error::Error;
};

// A property the pipeline guarantees was found broken at runtime.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace hca
