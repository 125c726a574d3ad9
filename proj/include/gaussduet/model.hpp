#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gaussduet/errors.hpp"

namespace gaussduet {

enum class CouplingKind { Linear, Nonlinear };

/// One input mode / reservoir: thermal occupation n and two-photon
/// correlation magnitude m. Physical states satisfy m <= sqrt(n(n+1));
/// m <= n is classically squeezed, n < m quantum squeezed.
struct ModeParams {
  double n = 0.0;
  double m = 0.0;

  double physicality_bound() const;
};

enum class ModeClass { Vacuum, Thermal, ClassicalSqueezed, QuantumSqueezed };

struct CouplingConfig {
  CouplingKind kind = CouplingKind::Linear;
  double g = 0.0;      // coupling strength (rate)
  double kappa = 1.0;  // photon loss rate, > 0
};

/// Full two-mode configuration. The noise-ellipse phase of mode a is phi;
/// mode b's phase is fixed at zero. Use make_system_config to get phi
/// reduced to [0, 2*pi).
struct SystemConfig {
  ModeParams mode_a;
  ModeParams mode_b;
  double phi = 0.0;
  CouplingConfig coupling;
};

SystemConfig make_system_config(ModeParams a, ModeParams b, double phi,
                                CouplingConfig coupling);

/// Reduce an angle to [0, 2*pi).
double reduce_phase(double phi);

struct ValidationReport {
  ModeClass mode_a;
  ModeClass mode_b;
};

/// Throws PhysicalityError / ConfigError on violations, otherwise classifies
/// each mode. Violations of the m bound below 1e-12 are tolerated (see
/// clamped()).
ValidationReport validate(const SystemConfig& config);

/// Copy of config with each m clamped to sqrt(n(n+1)) when it exceeds the
/// bound by less than 1e-12. Larger violations throw PhysicalityError.
SystemConfig clamped(SystemConfig config);

/// Coupling strength compactified to an angle: psi = arctan(g/kappa) for the
/// linear process, chi = artanh(g/kappa) for the nonlinear one.
struct ScaledCoupling {
  double angle = 0.0;
};

ScaledCoupling scaled_coupling(const CouplingConfig& coupling);

/// Sum/difference parametrization of the two input modes plus the phase
/// geometry entering the single-mode correlation formulas.
///
/// The angle theta (cot(theta) = delta_m cot(phi) for the linear process,
/// tan(theta) = delta_m tan(phi) for the nonlinear one) is never inverted
/// from cot/tan; the complex products linear_phase() and nonlinear_phase()
/// carry it branch-safely instead.
struct DerivedParams {
  double n = 0.0;   // (n_a + n_b)/2
  double dn = 0.0;  // (n_a - n_b)/2
  double m = 0.0;   // (m_a + m_b)/2
  double dm = 0.0;  // (m_a - m_b)/2
  double delta_n = 0.0;  // dn/n, 0 when n == 0
  double delta_m = 0.0;  // dm/m, 0 when m == 0
  double phi = 0.0;
  double theta = 0.0;  // in [0, pi/2], resolved per coupling kind

  /// alpha*sin(phi)*e^{i*theta} = delta_m*cos(phi) + i*sin(phi)
  std::complex<double> linear_phase() const;
  /// beta*cos(phi)*e^{i*theta} = cos(phi) + i*delta_m*sin(phi)
  std::complex<double> nonlinear_phase() const;

  double alpha_sin_phi() const;  // |linear_phase()|
  double beta_cos_phi() const;   // |nonlinear_phase()|
};

DerivedParams derived_params(const SystemConfig& config);

/// 4x4 symmetric matrix of symmetrized quadrature second moments, ordering
/// (X_a, Y_a, X_b, Y_b).
struct QuadratureCovariance {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();

  /// Minimum eigenvalue of the Hermitian matrix M + (i/2)*Omega; physical
  /// states have it >= 0 up to roundoff.
  double min_symplectic_eigenvalue() const;
  bool is_physical(double tol = 1e-10) const;
};

/// Symplectic form for the (X_a, Y_a, X_b, Y_b) ordering.
Eigen::Matrix4d symplectic_form();

/// t = 0 covariance of the two uncoupled modes; entries are the
/// (symmetrized) reservoir noise coefficients.
QuadratureCovariance input_covariance(const SystemConfig& config);

}  // namespace gaussduet
