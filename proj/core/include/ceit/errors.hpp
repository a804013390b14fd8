#pragma once

#include <stdexcept>
#include <string>

namespace ceit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// transmission() with eta = 0 (T_a = n_s/(eta/kappa)^2 is 0/0).
class UndefinedTransmission : public Error {
 public:
  using Error::Error;
};

// g^2 with steady photon number below the numerical floor.
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

// Liouvillian kernel is not one-dimensional (or the solve produced garbage).
class DegenerateSteadyState : public Error {
 public:
  using Error::Error;
};

// Adaptive Fock-cutoff escalation hit the hard cap before converging.
class TruncationFailure : public Error {
 public:
  using Error::Error;
};

// Hysteresis scan found no stable root at some step.
class NoStableRoot : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ceit
