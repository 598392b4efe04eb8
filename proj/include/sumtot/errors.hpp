#pragma once

#include <stdexcept>
#include <string>

namespace sumtot {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (pole, divergence, non-positive factor).
class DomainError : public Error {
public:
    using Error::Error;
};

// Request exceeds a table or memory budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Integer or floating-point result not representable.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Caller violated a documented precondition (unsupported order, bad ladder, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Cached table failed validation on load.
class CacheError : public Error {
public:
    using Error::Error;
};

} // namespace sumtot
