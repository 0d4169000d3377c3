#pragma once

#include <stdexcept>
#include <string>

namespace pairsolve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested block exceeds the dense-storage budget.
struct CapacityError : Error {
  using Error::Error;
};

// Evaluation at a pole of a rational map (v=1, root on a level, ...).
struct PoleError : Error {
  using Error::Error;
};

// Two Bethe roots (or a root and a level) coincide within working precision.
struct SingularConfigurationError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual(last_residual) {}
  double last_residual;
};

struct DivergenceError : Error {
  using Error::Error;
};

struct ConjugationViolationError : Error {
  using Error::Error;
};

struct SectorMismatchError : Error {
  using Error::Error;
};

struct InapplicableDualityError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace pairsolve
