#include "gaussduet/observables.hpp"

#include <cmath>

namespace gaussduet {

namespace {
constexpr double kPopFloor = 1e-14;

SqueezingClass classify_quadrature(double var, double partner) {
  if (var < 0.5 - 1e-12) return SqueezingClass::Quantum;
  if (var < partner - 1e-12) return SqueezingClass::Classical;
  return SqueezingClass::None;
}
}  // namespace

CorrelationDegrees degrees(const MomentSet& ms) {
  CorrelationDegrees deg;
  if (ms.pop_a >= kPopFloor) deg.eta_aa = std::abs(ms.c_aa) / ms.pop_a;
  if (ms.pop_b >= kPopFloor) deg.eta_bb = std::abs(ms.c_bb) / ms.pop_b;
  if (ms.pop_a >= kPopFloor && ms.pop_b >= kPopFloor) {
    const double geo = std::sqrt(ms.pop_a * ms.pop_b);
    deg.gamma_ab = std::abs(ms.c_adagb) / geo;
    deg.eta_ab = std::abs(ms.c_ab) / geo;
  }
  if (ms.pop_a + ms.pop_b >= kPopFloor)
    deg.visibility = 2.0 * std::abs(ms.c_adagb) / (ms.pop_a + ms.pop_b);
  return deg;
}

Verdicts entanglement_check(const CorrelationDegrees& deg) {
  Verdicts v;
  if (!deg.eta_ab) return v;
  const double eab2 = *deg.eta_ab * *deg.eta_ab;
  v.entanglement_simple = *deg.eta_ab > 1.0;
  const double g2 = deg.gamma_ab ? *deg.gamma_ab * *deg.gamma_ab : 0.0;
  if (deg.eta_aa) v.entanglement_cs_a = eab2 > 1.0 + *deg.eta_aa * *deg.eta_aa - g2;
  if (deg.eta_bb) v.entanglement_cs_b = eab2 > 1.0 + *deg.eta_bb * *deg.eta_bb - g2;
  return v;
}

Verdicts squeezing_report(const VarianceSet& vs) {
  Verdicts v;
  v.xx_a = classify_quadrature(vs.xx_a, vs.yy_a);
  v.yy_a = classify_quadrature(vs.yy_a, vs.xx_a);
  v.xx_b = classify_quadrature(vs.xx_b, vs.yy_b);
  v.yy_b = classify_quadrature(vs.yy_b, vs.xx_b);
  return v;
}

double quantum_threshold_psi(double n) {
  if (!(n > 0.0)) throw ConfigError("quantum_threshold_psi requires n > 0");
  return std::acos(std::pow(1.0 - 1.0 / (n + 1.0), 0.25));
}

NonlinearDegreeLimits nonlinear_degree_limits(const SystemConfig& raw) {
  const SystemConfig config = clamped(raw);
  constexpr double tol = 1e-9;
  const auto& a = config.mode_a;
  const auto& b = config.mode_b;
  if (config.coupling.kind != CouplingKind::Nonlinear)
    throw ScenarioMismatchError("limits apply to the nonlinear coupling only");
  if (!(a.m > 0.0))
    throw ScenarioMismatchError("mode a must carry two-photon correlations");
  NonlinearDegreeLimits out{NonlinearScenario::EqualSqueezed, {}, {}};
  if (std::abs(a.n - b.n) < tol && std::abs(a.m - b.m) < tol) {
    if (std::abs(std::abs(std::cos(config.phi)) - 1.0) > tol)
      throw ScenarioMismatchError("equal-squeezed limit holds for phi = 0 or pi");
    if (!(a.n > 0.0)) throw ScenarioMismatchError("degrees undefined for n = 0");
    const double lim = 2.0 * a.m / (2.0 * a.n + 1.0);
    out.scenario = NonlinearScenario::EqualSqueezed;
    out.eta_aa = lim;
    out.eta_bb = lim;
    return out;
  }
  if (b.m < tol && std::abs(a.n - b.n) < tol) {
    const double lim = a.m / (2.0 * a.n + 1.0);
    out.scenario = NonlinearScenario::SqueezedPlusThermal;
    out.eta_aa = lim;
    out.eta_bb = lim;
    return out;
  }
  if (b.m < tol && b.n < tol) {
    const double lim = a.m / (a.n + 1.0);
    out.scenario = NonlinearScenario::SqueezedPlusVacuum;
    out.eta_aa = lim;
    out.eta_bb = lim;
    return out;
  }
  throw ScenarioMismatchError("input state matches no special-case scenario");
}

}  // namespace gaussduet
