#pragma once

#include <stdexcept>
#include <string>

namespace ohmnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConnectivityError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

// Thrown when a closed/recursive formula does not cover the requested
// vertex pair; callers should fall back to the general methods.
struct UnsupportedPairError : DomainError {
    using DomainError::DomainError;
};

} // namespace ohmnet
