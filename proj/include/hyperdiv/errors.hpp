#pragma once

#include <stdexcept>

namespace hyperdiv {

// Base class for all library errors; message is a one-line diagnostic.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size limit or term budget was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// An argument lies outside the range a table or function supports.
struct RangeError : Error {
    using Error::Error;
};

// An argument violates a mathematical domain restriction.
struct DomainError : Error {
    using Error::Error;
};

// A certified error bound is too large for the requested use.
struct PrecisionError : Error {
    using Error::Error;
};

// A stated precondition fails at a specific point; the message names it.
struct PreconditionError : Error {
    using Error::Error;
};

// Too few usable data points for the requested computation.
struct InsufficientDataError : Error {
    using Error::Error;
};

}  // namespace hyperdiv
