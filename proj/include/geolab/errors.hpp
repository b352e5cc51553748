#pragma once

#include <stdexcept>
#include <string>

namespace geolab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed word text or a word that reduces to the identity.
struct ParseError : Error {
  using Error::Error;
};

/// Input word is a proper power u^m, m >= 2.
struct NonPrimitiveError : Error {
  using Error::Error;
};

/// Two of the four ideal endpoints of a lift pair coincide.
struct SharedEndpointError : Error {
  using Error::Error;
};

/// A pair translate landed inside <w> — lifts were not distinct.
struct DegeneratePairError : Error {
  using Error::Error;
};

/// Schottky validation failed (overlapping domains or non-hyperbolic generator).
struct ConfigInvalidError : Error {
  using Error::Error;
};

/// Iterative and fixed-point boundary limits disagree beyond tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Ideal feet of two geodesics are too close to decide alternation.
struct NearTangencyError : Error {
  using Error::Error;
};

/// An intersection point sits within epsilon of the fundamental-domain boundary.
struct BoundaryAmbiguityError : Error {
  using Error::Error;
};

/// Requested scale exceeds the configured hard cap.
struct CapExceededError : Error {
  using Error::Error;
};

}  // namespace geolab
