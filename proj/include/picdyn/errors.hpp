#pragma once

#include <stdexcept>
#include <string>

namespace picdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing vectors or matrices across different lattices.
struct LatticeMismatchError : Error {
    using Error::Error;
};

struct InvalidLatticeError : Error {
    using Error::Error;
};

// An operation that requires a verified isometry received an unverified or
// failed candidate.
struct NotVerifiedError : Error {
    using Error::Error;
};

struct NotQuadraticError : Error {
    using Error::Error;
};

struct NotExponentialError : Error {
    using Error::Error;
};

struct EnumerationCapExceededError : Error {
    using Error::Error;
};

struct InvalidExceptionalSetError : Error {
    using Error::Error;
};

// The isometry does not stabilize the proposed exceptional set.
struct NotPermutedError : Error {
    using Error::Error;
};

struct NotSingularError : Error {
    using Error::Error;
};

struct DegenerateMapError : Error {
    using Error::Error;
};

struct ResourceCapError : Error {
    using Error::Error;
};

struct CancelledError : Error {
    using Error::Error;
};

struct DocumentError : Error {
    using Error::Error;
};

}  // namespace picdyn
