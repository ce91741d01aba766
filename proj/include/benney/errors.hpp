#pragma once

#include <stdexcept>
#include <string>

namespace benney {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A gradient component is not weighted-homogeneous of the degree the
/// requested potential would force on it.
struct NonHomogeneousGradient : Error {
    using Error::Error;
};

/// Re-differentiating a reconstructed potential did not reproduce the input
/// gradient; the input was not exact.
struct GradientMismatch : Error {
    using Error::Error;
};

/// Internal consistency assertion of the chain solver fired.  This cannot
/// happen for a correct implementation; it is surfaced instead of being
/// silently ignored.
struct ExactnessFailure : Error {
    using Error::Error;
};

/// Requested horizon cannot hold the mandatory boundary entries of a row.
struct HorizonTooSmall : Error {
    using Error::Error;
};

/// Operation applied to a canonical operator of the wrong form.
struct FormMismatch : Error {
    using Error::Error;
};

/// Polynomial contains a variable kind the operation cannot handle.
struct UnsupportedVariable : Error {
    using Error::Error;
};

/// A computation would reference a moment index beyond the agreed horizon.
/// The truncation boundary is reported, never silently zero-filled.
struct HorizonExceeded : Error {
    using Error::Error;
};

/// Input polynomial fails a required weighted-homogeneity precondition.
struct DegreeMismatch : Error {
    using Error::Error;
};

/// A required member of a polynomial family was not supplied.
struct MissingH : Error {
    using Error::Error;
};

/// Numeric integration left the configured bound or produced non-finite
/// values.
struct BlowUp : Error {
    using Error::Error;
};

/// Malformed text or JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace benney
