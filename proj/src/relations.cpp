#include "gaussduet/relations.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "gaussduet/analytic.hpp"
#include "gaussduet/observables.hpp"
#include "gaussduet/oracle.hpp"

namespace gaussduet {
namespace relations {

namespace {

SystemConfig at_angle(SystemConfig config, double angle) {
  const double kappa = config.coupling.kappa;
  if (config.coupling.kind == CouplingKind::Linear) {
    if (angle < 0.0 || angle >= std::numbers::pi / 2.0)
      throw ConfigError("psi must lie in [0, pi/2)");
    config.coupling.g = kappa * std::tan(angle);
  } else {
    if (angle < 0.0) throw ConfigError("chi must be non-negative");
    config.coupling.g = kappa * std::tanh(angle);
  }
  return config;
}

using SteadyFn = std::function<MomentSet(const SystemConfig&)>;

IdentityResult check_with(const SystemConfig& raw, IdentityKind which, double h,
                          WhichMode mode, bool richardson,
                          const SteadyFn& steady) {
  if (h < 1e-6 || h > 1e-2) throw ConfigError("step h must lie in [1e-6, 1e-2]");
  const SystemConfig config = clamped(raw);
  const double angle = scaled_coupling(config.coupling).angle;
  const bool linear = config.coupling.kind == CouplingKind::Linear;
  if (linear && angle + h >= std::numbers::pi / 2.0)
    throw ConfigError("psi too close to pi/2 for the requested step");

  const MomentSet center = steady(config);
  const bool fd_on_population = (linear == (which == IdentityKind::OnePhoton));
  auto single = [&](const MomentSet& ms) -> std::complex<double> {
    if (fd_on_population)
      return mode == WhichMode::A ? ms.pop_a : ms.pop_b;
    return mode == WhichMode::A ? ms.c_aa : ms.c_bb;
  };
  // The single-mode steady quantities are even in the angle, so the stencil
  // reflects across 0 when angle < step.
  auto derivative = [&](double step) {
    const MomentSet plus = steady(at_angle(config, angle + step));
    const MomentSet minus = steady(at_angle(config, std::abs(angle - step)));
    return (single(plus) - single(minus)) / (2.0 * step);
  };

  std::complex<double> deriv = derivative(h);
  if (richardson)
    deriv = (4.0 * derivative(h / 2.0) - deriv) / 3.0;

  IdentityResult r;
  r.lhs = which == IdentityKind::OnePhoton ? std::abs(center.c_adagb)
                                           : std::abs(center.c_ab);
  r.rhs = 0.5 * std::abs(deriv);
  r.residual = std::abs(r.lhs - r.rhs);
  r.step = h;
  return r;
}

}  // namespace

IdentityResult check_identity(const SystemConfig& config, IdentityKind which,
                              double h, WhichMode mode, bool richardson) {
  return check_with(config, which, h, mode, richardson,
                    [](const SystemConfig& c) { return steady_moments(c); });
}

IdentityResult check_identity_oracle(const SystemConfig& config,
                                     IdentityKind which, double h,
                                     WhichMode mode) {
  return check_with(config, which, h, mode, false,
                    [](const SystemConfig& c) { return oracle::steady_moments(c); });
}

ExtremaReport locate_extrema(const SystemConfig& config_template,
                             ExtremaPair pair, std::span<const double> angles) {
  if (angles.size() < 3)
    throw GridTooCoarseError("need at least 3 grid points");
  std::vector<double> inter(angles.size());
  std::vector<double> single(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const MomentSet ms = steady_moments(at_angle(config_template, angles[i]));
    if (pair == ExtremaPair::OnePhotonVsPopulation) {
      inter[i] = std::abs(ms.c_adagb);
      single[i] = ms.pop_a;
    } else {
      const CorrelationDegrees deg = degrees(ms);
      if (!deg.eta_ab || !deg.eta_aa)
        throw ConfigError("degrees undefined on the requested grid");
      inter[i] = *deg.eta_ab;
      single[i] = *deg.eta_aa;
    }
  }

  ExtremaReport report;
  double best = inter[0];
  for (std::size_t i = 1; i < inter.size(); ++i) {
    if (inter[i] > best) {
      best = inter[i];
      report.argmax_index = i;
    }
  }
  report.argmax_angle = angles[report.argmax_index];

  // Second differences live on interior points 1..N-2; an inflection is a
  // sign change between neighbours, attributed to the point with the smaller
  // magnitude.
  bool found = false;
  for (std::size_t i = 1; i + 2 < single.size() && !found; ++i) {
    const double d2a = single[i + 1] - 2.0 * single[i] + single[i - 1];
    const double d2b = single[i + 2] - 2.0 * single[i + 1] + single[i];
    if ((d2a < 0.0) != (d2b < 0.0)) {
      report.inflection_index = std::abs(d2a) <= std::abs(d2b) ? i : i + 1;
      found = true;
    }
  }
  if (!found)
    throw GridTooCoarseError("no inflection bracket resolvable on the grid");
  report.inflection_angle = angles[report.inflection_index];
  report.separation = static_cast<long>(report.argmax_index) -
                      static_cast<long>(report.inflection_index);
  return report;
}

}  // namespace relations
}  // namespace gaussduet
