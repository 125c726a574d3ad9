#pragma once

#include <stdexcept>
#include <string>

namespace gaussduet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid rates or malformed configuration (kappa <= 0, g < 0, bad grid).
struct ConfigError : Error {
  using Error::Error;
};

/// Mode parameters violate m <= sqrt(n(n+1)).
struct PhysicalityError : Error {
  using Error::Error;
};

/// Steady state requested for a non-Hurwitz drift (nonlinear g >= kappa).
struct StabilityError : Error {
  using Error::Error;
};

/// Extracted population below the negative tolerance.
struct NegativePopulationError : Error {
  using Error::Error;
};

/// Input state does not match any of the special-case scenarios.
struct ScenarioMismatchError : Error {
  using Error::Error;
};

/// Grid too small to bracket an extremum or inflection point.
struct GridTooCoarseError : Error {
  using Error::Error;
};

}  // namespace gaussduet
