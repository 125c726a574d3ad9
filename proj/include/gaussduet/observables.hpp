#pragma once

#include <optional>

#include "gaussduet/analytic.hpp"
#include "gaussduet/model.hpp"

namespace gaussduet {

/// Normalized correlation degrees. A degree whose denominator population is
/// below 1e-14 is reported as nullopt (undefined), never 0 or infinity.
struct CorrelationDegrees {
  std::optional<double> eta_aa;
  std::optional<double> eta_bb;
  std::optional<double> gamma_ab;
  std::optional<double> eta_ab;
  std::optional<double> visibility;  // 2|<a^b>| / (pop_a + pop_b)
};

enum class SqueezingClass { None, Classical, Quantum };

struct Verdicts {
  SqueezingClass xx_a = SqueezingClass::None;
  SqueezingClass yy_a = SqueezingClass::None;
  SqueezingClass xx_b = SqueezingClass::None;
  SqueezingClass yy_b = SqueezingClass::None;
  bool entanglement_simple = false;  // eta_ab > 1
  /// Cauchy-Schwarz criterion eta_ab^2 > 1 + eta_ii^2 - gamma_ab^2, evaluated
  /// with eta_aa and with eta_bb (it is exact for eta_aa = eta_bb).
  bool entanglement_cs_a = false;
  bool entanglement_cs_b = false;
};

CorrelationDegrees degrees(const MomentSet& ms);

/// Verdicts from degrees only (squeezing fields left at None; undefined
/// degrees make every verdict false).
Verdicts entanglement_check(const CorrelationDegrees& deg);

/// Per-quadrature squeezing classification: Quantum when the variance is
/// below 1/2 - 1e-12, Classical when it is below the partner quadrature of
/// the same mode, None otherwise.
Verdicts squeezing_report(const VarianceSet& vs);

/// The angle psi* with cos^2(psi*) = sqrt(1 - 1/(n+1)); below it the
/// single-mode correlations of equal ideally squeezed inputs stay quantum.
double quantum_threshold_psi(double n);

enum class NonlinearScenario { EqualSqueezed, SqueezedPlusThermal, SqueezedPlusVacuum };

/// chi -> infinity asymptotes of the single-mode degrees for the nonlinear
/// special cases:
///   equal squeezed, phi = 0:     eta_aa = eta_bb = (m/n) 2n/(2n+1)
///   squeezed + thermal (ideal m): eta_bb = (1/2) sqrt(1 - 1/(2n+1)^2)
///   squeezed + vacuum  (ideal m): eta_bb = sqrt(n/(n+1))
struct NonlinearDegreeLimits {
  NonlinearScenario scenario;
  std::optional<double> eta_aa;
  std::optional<double> eta_bb;
};

NonlinearDegreeLimits nonlinear_degree_limits(const SystemConfig& config);

}  // namespace gaussduet
