#pragma once

#include <complex>
#include <utility>

#include "gaussduet/model.hpp"

namespace gaussduet {

/// Equal-time second moments of the two modes. Complex correlations follow
/// the convention in which the uncoupled input state has
/// <aa> = m_a e^{2i phi} and <bb> = m_b.
struct MomentSet {
  double pop_a = 0.0;
  double pop_b = 0.0;
  std::complex<double> c_aa;     // <aa>
  std::complex<double> c_bb;     // <bb>
  std::complex<double> c_adagb;  // <a^dag b>
  std::complex<double> c_ab;     // <ab>
};

struct VarianceSet {
  double xx_a = 0.0;
  double yy_a = 0.0;
  double xx_b = 0.0;
  double yy_b = 0.0;
  double xy_a = 0.0;  // symmetrized <X_a Y_a>
  double xy_b = 0.0;
};

/// V+- (interaction-invariant) and U+- (interaction-affected) parts of the
/// quadrature variances.
struct NoiseSplit {
  double v_plus = 0.0;
  double v_minus = 0.0;
  double u_plus = 0.0;
  double u_minus = 0.0;
};

/// Envelope driving populations, variances and single-mode correlations:
/// w_l = sin(psi)[sin(psi) - e^{-2 kappa t} sin(2gt + psi)] for the linear
/// process, the sinh analogue for the nonlinear one. The nonlinear form is
/// evaluated through rates directly and stays finite-time valid for g >= kappa.
double envelope_w(const CouplingConfig& coupling, double t);

/// Envelope generating inter-mode correlations:
/// u_l = sin(psi)[cos(psi) - e^{-2 kappa t} cos(2gt + psi)] and the cosh
/// analogue.
double envelope_u(const CouplingConfig& coupling, double t);

/// t -> infinity limits: sin^2, sin*cos (linear), sinh^2, sinh*cosh
/// (nonlinear, requires g < kappa).
double steady_envelope_w(const CouplingConfig& coupling);
double steady_envelope_u(const CouplingConfig& coupling);

NoiseSplit variance_decomposition(const SystemConfig& config);

VarianceSet variances(const SystemConfig& config, double t);
VarianceSet steady_variances(const SystemConfig& config);

std::pair<double, double> populations(const SystemConfig& config, double t);
std::pair<std::complex<double>, std::complex<double>> single_mode_correlations(
    const SystemConfig& config, double t);
std::pair<std::complex<double>, std::complex<double>> two_mode_correlations(
    const SystemConfig& config, double t);

MomentSet moments(const SystemConfig& config, double t);
MomentSet steady_moments(const SystemConfig& config);

/// Quadrature variances implied by a MomentSet:
/// xx = pop + 1/2 + Re<aa>, yy = pop + 1/2 - Re<aa>, xy = -Im<aa>.
VarianceSet variances_from_moments(const MomentSet& ms);

}  // namespace gaussduet
