#pragma once

#include <stdexcept>
#include <string>

namespace theta {

  // Base of every error the library raises. Each subclass names a specific
  // broken contract; all of them indicate either bad input or a computation
  // that contradicts a structural claim the library checks.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class PreconditionViolated : public Error {
   public:
    using Error::Error;
  };

  // A Cyclotomic value expected to be a rational integer was not one.
  class NotRationalInteger : public Error {
   public:
    using Error::Error;
  };

  // A root of unity outside Q(zeta_9) would be needed.
  class UnrepresentableRoot : public Error {
   public:
    using Error::Error;
  };

  // A constructed group does not have the expected structure.
  class StructureMismatch : public Error {
   public:
    using Error::Error;
  };

  // A closed-form multiplicity formula produced something it says it cannot.
  class FormulaViolation : public Error {
   public:
    using Error::Error;
  };

  class ScaleExceeded : public Error {
   public:
    using Error::Error;
  };

  // Character subtraction in the graded oracle went negative.
  class NegativeRemainder : public Error {
   public:
    using Error::Error;
  };

  // Hilbert series deconvolution produced a negative coefficient.
  class NegativeCoefficient : public Error {
   public:
    using Error::Error;
  };

}  // namespace theta
