#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

/// Base class for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by exact_div when no exact quotient exists in the Laurent ring.
struct NotDivisible : Error {
    using Error::Error;
};

/// Thrown by the constant-term oracle when the raw constant term is not
/// divisible by m!n!.  Indicates a bug, never a legitimate input.
struct DivisibilityViolation : Error {
    using Error::Error;
};

/// Thrown by the constant-term oracle when a user-supplied truncation order
/// and order+5 give different values.
struct TruncationUnstable : Error {
    using Error::Error;
};

/// Thrown by decomposition routines when a nonzero coefficient appears on the
/// boundary of the candidate enumeration window.
struct WindowTooSmall : Error {
    using Error::Error;
};

/// Thrown by irr_char when the runtime triangularity verification fails.
struct NonUnitriangular : Error {
    using Error::Error;
};

} // namespace superchar
