#pragma once

#include <stdexcept>
#include <string>

namespace toro {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix or subspace dimensions do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A map does not carry the domain subspace into the codomain subspace.
struct NotRestrictable : Error {
    using Error::Error;
};

/// Inversion of a singular matrix was requested.
struct NotInvertible : Error {
    using Error::Error;
};

/// A structural invariant of a complex, sheaf or bisheaf is violated.
struct ValidationError : Error {
    using Error::Error;
};

/// Geometry outside the supported classes (see README for the limits).
struct UnsupportedGeometry : Error {
    using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

/// Instance exceeds the limits of a brute-force oracle.
struct SizeLimit : Error {
    using Error::Error;
};

/// A mathematical guarantee failed at runtime; indicates a bug upstream.
struct InternalInconsistency : Error {
    using Error::Error;
};

} // namespace toro
