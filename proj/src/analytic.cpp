#include "gaussduet/analytic.hpp"

#include <cmath>

namespace gaussduet {

namespace {

// (1 - e^{-x}) / x, finite at x = 0.
double expm1_ratio(double x) {
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

void check_time(double t) {
  if (t < 0.0 || std::isnan(t)) throw ConfigError("t must be non-negative");
}

// Generic moment assembly shared by the finite-time and steady paths.
MomentSet assemble_moments(const SystemConfig& config, double w, double u) {
  const DerivedParams d = derived_params(config);
  const std::complex<double> ephi = std::polar(1.0, d.phi);
  const std::complex<double> e2phi = std::polar(1.0, 2.0 * d.phi);
  MomentSet ms;
  if (config.coupling.kind == CouplingKind::Linear) {
    const std::complex<double> z = d.linear_phase() * ephi;  // alpha sin(phi) e^{i(theta+phi)}
    ms.pop_a = d.n + d.dn * (1.0 - w);
    ms.pop_b = d.n - d.dn * (1.0 - w);
    ms.c_aa = config.mode_a.m * e2phi - d.m * w * z;
    ms.c_bb = config.mode_b.m + d.m * w * z;
    ms.c_adagb = -d.dn * u;
    ms.c_ab = -d.m * u * z;
  } else {
    const std::complex<double> z = d.nonlinear_phase() * ephi;  // beta cos(phi) e^{i(theta+phi)}
    const double pump = d.n + 0.5;
    ms.pop_a = config.mode_a.n + pump * w;
    ms.pop_b = config.mode_b.n + pump * w;
    ms.c_aa = config.mode_a.m * e2phi + d.m * w * z;
    ms.c_bb = config.mode_b.m + d.m * w * std::conj(z);
    ms.c_adagb = d.m * u * std::conj(z);
    ms.c_ab = pump * u;
  }
  return ms;
}

VarianceSet assemble_variances(const SystemConfig& config, double w) {
  const NoiseSplit s = variance_decomposition(config);
  VarianceSet vs;
  if (config.coupling.kind == CouplingKind::Linear) {
    vs.xx_a = s.v_plus + s.u_minus * (1.0 - w);
    vs.yy_a = s.v_minus + s.u_plus * (1.0 - w);
    vs.xx_b = s.v_plus - s.u_minus * (1.0 - w);
    vs.yy_b = s.v_minus - s.u_plus * (1.0 - w);
  } else {
    vs.xx_a = s.v_plus * (1.0 + w) + s.u_minus;
    vs.yy_a = s.v_minus * (1.0 + w) + s.u_plus;
    vs.xx_b = s.v_plus * (1.0 + w) - s.u_minus;
    vs.yy_b = s.v_minus * (1.0 + w) - s.u_plus;
  }
  return vs;
}

}  // namespace

double envelope_w(const CouplingConfig& coupling, double t) {
  check_time(t);
  const double g = coupling.g;
  const double kappa = coupling.kappa;
  if (coupling.kind == CouplingKind::Linear) {
    const double psi = std::atan2(g, kappa);
    return std::sin(psi) *
           (std::sin(psi) - std::exp(-2.0 * kappa * t) * std::sin(2.0 * g * t + psi));
  }
  // sinh(chi)[sinh(chi) - e^{-2 kappa t} sinh(2gt + chi)] rewritten through
  // rates; valid for any g >= 0 at finite t, g = kappa included.
  const double d = kappa - g;
  const double decay = 0.5 * (std::exp(-2.0 * d * t) - std::exp(-2.0 * (kappa + g) * t));
  return g / (kappa + g) * (2.0 * g * t * expm1_ratio(2.0 * d * t) - decay);
}

double envelope_u(const CouplingConfig& coupling, double t) {
  check_time(t);
  const double g = coupling.g;
  const double kappa = coupling.kappa;
  if (coupling.kind == CouplingKind::Linear) {
    const double psi = std::atan2(g, kappa);
    return std::sin(psi) *
           (std::cos(psi) - std::exp(-2.0 * kappa * t) * std::cos(2.0 * g * t + psi));
  }
  const double d = kappa - g;
  const double decay = 0.5 * (std::exp(-2.0 * d * t) + std::exp(-2.0 * (kappa + g) * t));
  return g / (kappa + g) * (2.0 * g * t * expm1_ratio(2.0 * d * t) + 1.0 - decay);
}

double steady_envelope_w(const CouplingConfig& coupling) {
  const double g = coupling.g;
  const double kappa = coupling.kappa;
  if (coupling.kind == CouplingKind::Linear)
    return g * g / (kappa * kappa + g * g);  // sin^2(psi)
  if (g >= kappa) throw StabilityError("nonlinear steady state requires g < kappa");
  return g * g / (kappa * kappa - g * g);  // sinh^2(chi)
}

double steady_envelope_u(const CouplingConfig& coupling) {
  const double g = coupling.g;
  const double kappa = coupling.kappa;
  if (coupling.kind == CouplingKind::Linear)
    return g * kappa / (kappa * kappa + g * g);  // sin(psi) cos(psi)
  if (g >= kappa) throw StabilityError("nonlinear steady state requires g < kappa");
  return g * kappa / (kappa * kappa - g * g);  // sinh(chi) cosh(chi)
}

NoiseSplit variance_decomposition(const SystemConfig& raw) {
  const SystemConfig config = clamped(raw);
  const DerivedParams d = derived_params(config);
  const double c2 = std::cos(d.phi) * std::cos(d.phi);
  const double s2 = std::sin(d.phi) * std::sin(d.phi);
  NoiseSplit s;
  s.v_plus = 0.5 + d.n + d.m * c2 - d.dm * s2;
  s.v_minus = 0.5 + d.n - d.m * c2 + d.dm * s2;
  s.u_plus = d.dn + d.m * s2 - d.dm * c2;
  s.u_minus = d.dn - d.m * s2 + d.dm * c2;
  return s;
}

VarianceSet variances(const SystemConfig& config, double t) {
  const MomentSet ms = moments(config, t);
  VarianceSet vs = assemble_variances(config, envelope_w(config.coupling, t));
  vs.xy_a = -ms.c_aa.imag();
  vs.xy_b = -ms.c_bb.imag();
  return vs;
}

VarianceSet steady_variances(const SystemConfig& config) {
  const MomentSet ms = steady_moments(config);
  VarianceSet vs = assemble_variances(config, steady_envelope_w(config.coupling));
  vs.xy_a = -ms.c_aa.imag();
  vs.xy_b = -ms.c_bb.imag();
  return vs;
}

std::pair<double, double> populations(const SystemConfig& config, double t) {
  const MomentSet ms = moments(config, t);
  return {ms.pop_a, ms.pop_b};
}

std::pair<std::complex<double>, std::complex<double>> single_mode_correlations(
    const SystemConfig& config, double t) {
  const MomentSet ms = moments(config, t);
  return {ms.c_aa, ms.c_bb};
}

std::pair<std::complex<double>, std::complex<double>> two_mode_correlations(
    const SystemConfig& config, double t) {
  const MomentSet ms = moments(config, t);
  return {ms.c_adagb, ms.c_ab};
}

MomentSet moments(const SystemConfig& raw, double t) {
  const SystemConfig config = clamped(raw);
  return assemble_moments(config, envelope_w(config.coupling, t),
                          envelope_u(config.coupling, t));
}

MomentSet steady_moments(const SystemConfig& raw) {
  const SystemConfig config = clamped(raw);
  return assemble_moments(config, steady_envelope_w(config.coupling),
                          steady_envelope_u(config.coupling));
}

VarianceSet variances_from_moments(const MomentSet& ms) {
  VarianceSet vs;
  vs.xx_a = ms.pop_a + 0.5 + ms.c_aa.real();
  vs.yy_a = ms.pop_a + 0.5 - ms.c_aa.real();
  vs.xy_a = -ms.c_aa.imag();
  vs.xx_b = ms.pop_b + 0.5 + ms.c_bb.real();
  vs.yy_b = ms.pop_b + 0.5 - ms.c_bb.real();
  vs.xy_b = -ms.c_bb.imag();
  return vs;
}

}  // namespace gaussduet
