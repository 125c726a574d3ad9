#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gaussduet/analytic.hpp"
#include "gaussduet/observables.hpp"

using namespace gaussduet;

TEST_SUITE("observables") {

TEST_CASE("degrees are undefined, not infinite, for empty modes") {
  MomentSet ms;  // all zero
  const CorrelationDegrees deg = degrees(ms);
  CHECK_FALSE(deg.eta_aa.has_value());
  CHECK_FALSE(deg.eta_bb.has_value());
  CHECK_FALSE(deg.gamma_ab.has_value());
  CHECK_FALSE(deg.eta_ab.has_value());
  CHECK_FALSE(deg.visibility.has_value());

  ms.pop_a = 0.5;
  ms.c_aa = {0.25, 0.0};
  const CorrelationDegrees partial = degrees(ms);
  CHECK(partial.eta_aa == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(partial.eta_bb.has_value());
  CHECK_FALSE(partial.eta_ab.has_value());
  CHECK(partial.visibility.has_value());  // pop_a + pop_b > 0
}

TEST_CASE("normalized degrees from a populated moment set") {
  MomentSet ms;
  ms.pop_a = 0.5;
  ms.pop_b = 2.0;
  ms.c_aa = {0.3, -0.4};  // |.| = 0.5
  ms.c_bb = {0.0, 1.0};
  ms.c_adagb = {0.6, 0.8};  // |.| = 1.0
  ms.c_ab = {0.0, 0.5};
  const CorrelationDegrees deg = degrees(ms);
  CHECK(*deg.eta_aa == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*deg.eta_bb == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*deg.gamma_ab == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*deg.eta_ab == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*deg.visibility == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("squeezing classification per quadrature") {
  VarianceSet vs{0.3, 0.9, 0.6, 0.7, 0.0, 0.0};
  const Verdicts v = squeezing_report(vs);
  CHECK(v.xx_a == SqueezingClass::Quantum);     // below 1/2
  CHECK(v.yy_a == SqueezingClass::None);        // above partner
  CHECK(v.xx_b == SqueezingClass::Classical);   // above 1/2, below partner
  CHECK(v.yy_b == SqueezingClass::None);

  // Boundary: exactly 1/2 is not quantum.
  VarianceSet edge{0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
  const Verdicts ve = squeezing_report(edge);
  CHECK(ve.xx_a == SqueezingClass::None);
}

TEST_CASE("entanglement criteria") {
  CorrelationDegrees deg;
  deg.eta_aa = 0.2;
  deg.eta_bb = 0.2;
  deg.gamma_ab = 0.0;
  deg.eta_ab = 1.3;
  const Verdicts v = entanglement_check(deg);
  CHECK(v.entanglement_simple);
  CHECK(v.entanglement_cs_a);  // 1.69 > 1 + 0.04
  CHECK(v.entanglement_cs_b);

  deg.eta_ab = 0.9;
  const Verdicts w = entanglement_check(deg);
  CHECK_FALSE(w.entanglement_simple);
  CHECK_FALSE(w.entanglement_cs_a);

  CorrelationDegrees empty;
  const Verdicts none = entanglement_check(empty);
  CHECK_FALSE(none.entanglement_simple);
  CHECK_FALSE(none.entanglement_cs_a);
}

TEST_CASE("steady entangled point for ideally squeezed inputs") {
  // n = 0.1, m = sqrt(n(n+1)), phi = pi/2, psi = pi/4.
  SystemConfig cfg;
  const double n = 0.1;
  const double m = std::sqrt(n * (n + 1.0));
  cfg.mode_a = {n, m};
  cfg.mode_b = {n, m};
  cfg.phi = std::numbers::pi / 2.0;
  cfg.coupling = {CouplingKind::Linear, 1.0, 1.0};
  const CorrelationDegrees deg = degrees(steady_moments(cfg));
  CHECK(*deg.eta_ab > 1.0);
  CHECK(*deg.eta_ab == doctest::Approx(1.6583124).epsilon(1e-6));
  CHECK(entanglement_check(deg).entanglement_simple);
}

TEST_CASE("quantum threshold angle") {
  // acos((1 - 1/(n+1))^{1/4}) at n = 1; cross-checked below against the
  // point where the steady variance crosses 1/2.
  CHECK(quantum_threshold_psi(1.0) == doctest::Approx(0.5718589).epsilon(1e-6));
  CHECK_THROWS_AS(quantum_threshold_psi(0.0), ConfigError);

  // The steady squeezed-quadrature variance crosses 1/2 exactly at psi*.
  const double n = 1.0;
  SystemConfig cfg;
  cfg.mode_a = {n, std::sqrt(n * (n + 1.0))};
  cfg.mode_b = cfg.mode_a;
  cfg.phi = std::numbers::pi / 2.0;
  const double psi_star = quantum_threshold_psi(n);
  cfg.coupling = {CouplingKind::Linear, std::tan(psi_star), 1.0};
  const VarianceSet vs = steady_variances(cfg);
  CHECK(std::abs(vs.xx_a - 0.5) < 1e-9);
  // Slightly below psi* the quadrature is still quantum squeezed; slightly
  // above it is not.
  cfg.coupling.g = std::tan(psi_star - 0.01);
  CHECK(squeezing_report(steady_variances(cfg)).xx_a == SqueezingClass::Quantum);
  cfg.coupling.g = std::tan(psi_star + 0.01);
  CHECK(squeezing_report(steady_variances(cfg)).xx_a != SqueezingClass::Quantum);
}

TEST_CASE("nonlinear asymptotic degrees by scenario") {
  SystemConfig cfg;
  cfg.coupling = {CouplingKind::Nonlinear, 0.5, 1.0};
  const double n = 0.5;
  const double ideal = std::sqrt(n * (n + 1.0));

  cfg.mode_a = {n, ideal};
  cfg.mode_b = {n, ideal};
  cfg.phi = 0.0;
  const auto equal = nonlinear_degree_limits(cfg);
  CHECK(equal.scenario == NonlinearScenario::EqualSqueezed);
  CHECK(*equal.eta_aa == doctest::Approx(2.0 * ideal / (2.0 * n + 1.0)).epsilon(1e-12));

  cfg.mode_b = {n, 0.0};
  const auto thermal = nonlinear_degree_limits(cfg);
  CHECK(thermal.scenario == NonlinearScenario::SqueezedPlusThermal);
  CHECK(*thermal.eta_bb == doctest::Approx(0.4330127).epsilon(1e-6));

  cfg.mode_b = {0.0, 0.0};
  const auto vac = nonlinear_degree_limits(cfg);
  CHECK(vac.scenario == NonlinearScenario::SqueezedPlusVacuum);
  CHECK(*vac.eta_bb == doctest::Approx(std::sqrt(n / (n + 1.0))).epsilon(1e-12));

  // No special case: unequal occupations with mode b squeezed.
  cfg.mode_b = {0.2, 0.1};
  CHECK_THROWS_AS(nonlinear_degree_limits(cfg), ScenarioMismatchError);
  // Equal-squeezed limit needs phi = 0 or pi.
  cfg.mode_b = {n, ideal};
  cfg.phi = 0.7;
  CHECK_THROWS_AS(nonlinear_degree_limits(cfg), ScenarioMismatchError);
}

TEST_CASE("nonlinear degrees approach their asymptotes at large chi") {
  SystemConfig cfg;
  const double n = 0.5;
  cfg.mode_a = {n, std::sqrt(n * (n + 1.0))};
  cfg.mode_b = {n, 0.0};
  cfg.coupling = {CouplingKind::Nonlinear, std::tanh(10.0), 1.0};
  const auto limits = nonlinear_degree_limits(cfg);
  const CorrelationDegrees deg = degrees(steady_moments(cfg));
  CHECK(std::abs(*deg.eta_bb - *limits.eta_bb) < 1e-4);
}

}  // TEST_SUITE
