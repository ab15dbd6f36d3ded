#pragma once

#include <stdexcept>
#include <string>

namespace curvezeta {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (CLI exit code 1).
struct InputError : Error {
    using Error::Error;
};

// The requested quantity cannot be certified at the working truncation
// (CLI exit code 3).
struct PrecisionError : Error {
    using Error::Error;
};

// A violated internal invariant; always a bug or corrupted data.
struct InternalError : Error {
    using Error::Error;
};

} // namespace curvezeta
