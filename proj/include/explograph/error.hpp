#pragma once

#include <stdexcept>
#include <string>

namespace explograph {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input does not match the expected file schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// An NC configuration whose nerve is not a downward-closed family.
class InvalidNerve : public Error {
public:
    using Error::Error;
};

// Point constraints are not in general position for the enumerator.
class NonGeneric : public Error {
public:
    NonGeneric() : Error("perturb points") {}
    explicit NonGeneric(const std::string& detail) : Error("perturb points: " + detail) {}
};

// Operation requires plane (two-dimensional) data.
class NotPlanar : public Error {
public:
    using Error::Error;
};

}  // namespace explograph
