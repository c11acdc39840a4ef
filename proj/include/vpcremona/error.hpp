#pragma once

#include <stdexcept>
#include <string>

namespace vpcremona {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arity or variable-count mismatch between operands.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Base-point analysis met a point that is not defined over Q.
class IrrationalBasePoint : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed (equations of condition, proximity, ...).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace vpcremona
