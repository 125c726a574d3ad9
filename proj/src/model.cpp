#include "gaussduet/model.hpp"

#include <cmath>
#include <numbers>

namespace gaussduet {

namespace {
constexpr double kPhysicalityTol = 1e-12;

ModeClass classify(const ModeParams& p) {
  if (p.n == 0.0 && p.m == 0.0) return ModeClass::Vacuum;
  if (p.m == 0.0) return ModeClass::Thermal;
  if (p.m <= p.n) return ModeClass::ClassicalSqueezed;
  return ModeClass::QuantumSqueezed;
}
}  // namespace

double ModeParams::physicality_bound() const { return std::sqrt(n * (n + 1.0)); }

double reduce_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

SystemConfig make_system_config(ModeParams a, ModeParams b, double phi,
                                CouplingConfig coupling) {
  SystemConfig cfg{a, b, reduce_phase(phi), coupling};
  validate(cfg);
  return clamped(cfg);
}

ValidationReport validate(const SystemConfig& config) {
  if (!(config.coupling.kappa > 0.0))
    throw ConfigError("kappa must be strictly positive");
  if (config.coupling.g < 0.0) throw ConfigError("g must be non-negative");
  for (const auto* mode : {&config.mode_a, &config.mode_b}) {
    if (mode->n < 0.0) throw ConfigError("n must be non-negative");
    if (mode->m < 0.0) throw ConfigError("m must be non-negative");
    if (mode->m > mode->physicality_bound() + kPhysicalityTol)
      throw PhysicalityError("m exceeds sqrt(n(n+1))");
  }
  return {classify(config.mode_a), classify(config.mode_b)};
}

SystemConfig clamped(SystemConfig config) {
  validate(config);
  for (auto* mode : {&config.mode_a, &config.mode_b}) {
    const double bound = mode->physicality_bound();
    if (mode->m > bound) mode->m = bound;
  }
  return config;
}

ScaledCoupling scaled_coupling(const CouplingConfig& coupling) {
  if (!(coupling.kappa > 0.0))
    throw ConfigError("kappa must be strictly positive");
  if (coupling.g < 0.0) throw ConfigError("g must be non-negative");
  if (coupling.kind == CouplingKind::Linear)
    return {std::atan2(coupling.g, coupling.kappa)};
  if (coupling.g >= coupling.kappa)
    throw StabilityError("nonlinear coupling requires g < kappa");
  return {std::atanh(coupling.g / coupling.kappa)};
}

std::complex<double> DerivedParams::linear_phase() const {
  return {delta_m * std::cos(phi), std::sin(phi)};
}

std::complex<double> DerivedParams::nonlinear_phase() const {
  return {std::cos(phi), delta_m * std::sin(phi)};
}

double DerivedParams::alpha_sin_phi() const { return std::abs(linear_phase()); }

double DerivedParams::beta_cos_phi() const { return std::abs(nonlinear_phase()); }

DerivedParams derived_params(const SystemConfig& config) {
  DerivedParams d;
  d.n = 0.5 * (config.mode_a.n + config.mode_b.n);
  d.dn = 0.5 * (config.mode_a.n - config.mode_b.n);
  d.m = 0.5 * (config.mode_a.m + config.mode_b.m);
  d.dm = 0.5 * (config.mode_a.m - config.mode_b.m);
  d.delta_n = d.n > 0.0 ? d.dn / d.n : 0.0;
  d.delta_m = d.m > 0.0 ? d.dm / d.m : 0.0;
  d.phi = reduce_phase(config.phi);
  if (config.coupling.kind == CouplingKind::Linear) {
    d.theta = std::atan2(std::abs(std::sin(d.phi)),
                         std::abs(d.delta_m * std::cos(d.phi)));
  } else {
    d.theta = std::atan2(std::abs(d.delta_m * std::sin(d.phi)),
                         std::abs(std::cos(d.phi)));
  }
  return d;
}

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

double QuadratureCovariance::min_symplectic_eigenvalue() const {
  Eigen::Matrix4cd h = m.cast<std::complex<double>>() +
                       std::complex<double>(0.0, 0.5) *
                           symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  return es.eigenvalues().minCoeff();
}

bool QuadratureCovariance::is_physical(double tol) const {
  return min_symplectic_eigenvalue() >= -tol;
}

QuadratureCovariance input_covariance(const SystemConfig& raw) {
  const SystemConfig config = clamped(raw);
  const double phi = config.phi;
  const auto& a = config.mode_a;
  const auto& b = config.mode_b;
  QuadratureCovariance cov;
  cov.m(0, 0) = 0.5 + a.n + a.m * std::cos(2.0 * phi);
  cov.m(1, 1) = 0.5 + a.n - a.m * std::cos(2.0 * phi);
  cov.m(0, 1) = cov.m(1, 0) = -a.m * std::sin(2.0 * phi);
  cov.m(2, 2) = 0.5 + b.n + b.m;
  cov.m(3, 3) = 0.5 + b.n - b.m;
  return cov;
}

}  // namespace gaussduet
