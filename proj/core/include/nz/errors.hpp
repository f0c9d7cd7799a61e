#ifndef NZ_ERRORS_HPP
#define NZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nz {

// Base class for every error thrown by the library, so callers can catch
// one type at the CLI boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Special functions evaluated at a log/dilog singularity.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// Argument coincides with a zero or pole of the quantum dilogarithm.
class PoleHit : public Error {
 public:
  using Error::Error;
};

// Resultant of a zero polynomial, or elimination of an absent variable.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Bivariate polynomial has odd powers of m, so no m^2-indexed matrix exists.
class MatrixConventionError : public Error {
 public:
  using Error::Error;
};

// Face-label matching of a triangulation is broken.
class GluingError : public Error {
 public:
  using Error::Error;
};

// Meridian form of a triangulation is empty or references unknown labels.
class MeridianError : public Error {
 public:
  using Error::Error;
};

// Linear reduction of the gluing constraints is inconsistent.
class RankError : public Error {
 public:
  using Error::Error;
};

// Monodromy word of a once-punctured torus bundle is a power of one letter.
class NotHyperbolic : public Error {
 public:
  using Error::Error;
};

// Potential evaluated where a dilogarithm argument is 0 or 1.
class SingularArgument : public Error {
 public:
  using Error::Error;
};

// Exponentiated gradient produced non-integer monomial exponents.
class NonIntegerExponent : public Error {
 public:
  using Error::Error;
};

// Multi-start Newton found no roots at all.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Continuation lost the solution branch (degeneration hit).
class PathCollision : public Error {
 public:
  using Error::Error;
};

// Elimination exceeded the configured intermediate term budget.
class SwellLimit : public Error {
 public:
  using Error::Error;
};

// Candidate A-polynomial does not involve the longitude variable.
class NoLongitudeVariable : public Error {
 public:
  using Error::Error;
};

// Surgery coefficients are not coprime.
class NotCoprime : public Error {
 public:
  using Error::Error;
};

// The two core-geodesic length computations disagree.
class InconsistentFrame : public Error {
 public:
  using Error::Error;
};

// Catalog JSON violates the entry schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Unknown catalog entry name or alias.
class NotFound : public Error {
 public:
  using Error::Error;
};

// Parse failure in the polynomial/equation text format.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nz

#endif  // NZ_ERRORS_HPP
