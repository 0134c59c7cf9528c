#pragma once

#include <stdexcept>
#include <string>

namespace weylstat {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (Cartan type, weight, partition, rational, ...).
struct ParseError : Error {
    using Error::Error;
};

/// Polynomial division left a nonzero remainder.
struct NonExactDivision : Error {
    using Error::Error;
};

/// A q-product expanded to a polynomial with a negative coefficient, so it
/// cannot be read as a distribution.
struct NegativeCoefficient : Error {
    using Error::Error;
};

/// A weight that had to be dominant was not.
struct NotDominant : Error {
    using Error::Error;
};

/// Work refused because it would exceed a configured resource cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Operation not defined for this Cartan family (e.g. roots of H3).
struct UnsupportedType : Error {
    using Error::Error;
};

/// Vector length does not match the rank in play.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// gcd constraint violated (simultaneous cores, rational q-Catalan).
struct NotCoprime : Error {
    using Error::Error;
};

/// Node is not a minuscule node of the given type.
struct NotMinuscule : Error {
    using Error::Error;
};

/// Point is not a lattice point of the dilated fundamental alcove.
struct NotInAlcove : Error {
    using Error::Error;
};

/// Evaluation point with a repeated coordinate where distinctness is required.
struct RepeatedCoordinate : Error {
    using Error::Error;
};

/// Partition has more nonzero rows than the number of tableau entries allows.
struct TooManyRows : Error {
    using Error::Error;
};

}  // namespace weylstat
