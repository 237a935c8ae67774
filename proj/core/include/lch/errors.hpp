#pragma once

#include <stdexcept>
#include <string>

namespace lch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched rings or generator tables, unknown generators, malformed input values.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A group-ring character with a non-invertible entry, or a point of the wrong size.
class InvalidPointError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration budget or word-length cap would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this input class (e.g. characteristic 0).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold (e.g. linearizing a DGA that is not good).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace lch
