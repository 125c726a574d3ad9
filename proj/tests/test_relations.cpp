#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gaussduet/relations.hpp"
#include "gaussduet/verify.hpp"

using namespace gaussduet;
using namespace gaussduet::relations;

TEST_SUITE("relations") {

TEST_CASE("identity holds trivially at zero coupling") {
  SystemConfig cfg;
  cfg.mode_a = {0.5, 0.3};
  cfg.mode_b = {0.2, 0.1};
  cfg.coupling = {CouplingKind::Linear, 0.0, 1.0};
  const IdentityResult r = check_identity(cfg, IdentityKind::OnePhoton);
  CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("all four mappings hold for random stable configs") {
  std::mt19937_64 rng(43);
  for (const CouplingKind kind : {CouplingKind::Linear, CouplingKind::Nonlinear}) {
    for (int i = 0; i < 25; ++i) {
      const SystemConfig cfg = verify::random_config(rng, kind);
      for (const IdentityKind which :
           {IdentityKind::OnePhoton, IdentityKind::TwoPhoton}) {
        const IdentityResult r = check_identity(cfg, which, 1e-4);
        CHECK(r.residual < 1e-6);
      }
    }
  }
}

TEST_CASE("central difference converges at second order") {
  std::mt19937_64 rng(47);
  for (const CouplingKind kind : {CouplingKind::Linear, CouplingKind::Nonlinear}) {
    for (int i = 0; i < 5; ++i) {
      const SystemConfig cfg = verify::random_config(rng, kind);
      for (const IdentityKind which :
           {IdentityKind::OnePhoton, IdentityKind::TwoPhoton}) {
        const double r_coarse = check_identity(cfg, which, 2e-3).residual;
        const double r_fine = check_identity(cfg, which, 1e-3).residual;
        if (r_fine < 1e-11) continue;  // below the noise floor
        const double order = std::log2(r_coarse / r_fine);
        CHECK(order >= 1.9);
      }
    }
  }
}

TEST_CASE("Richardson extrapolation tightens the residual") {
  SystemConfig cfg;
  cfg.mode_a = {1.2, 0.9};
  cfg.mode_b = {0.4, 0.2};
  cfg.phi = 0.8;
  cfg.coupling = {CouplingKind::Linear, 1.7, 1.1};
  const double plain = check_identity(cfg, IdentityKind::TwoPhoton, 1e-3).residual;
  const double rich =
      check_identity(cfg, IdentityKind::TwoPhoton, 1e-3, WhichMode::A, true)
          .residual;
  CHECK(rich < plain);
}

TEST_CASE("oracle-path identity agrees with the analytic path") {
  std::mt19937_64 rng(53);
  for (const CouplingKind kind : {CouplingKind::Linear, CouplingKind::Nonlinear}) {
    for (int i = 0; i < 5; ++i) {
      const SystemConfig cfg = verify::random_config(rng, kind);
      for (const IdentityKind which :
           {IdentityKind::OnePhoton, IdentityKind::TwoPhoton}) {
        const IdentityResult a = check_identity(cfg, which, 1e-4);
        const IdentityResult o = check_identity_oracle(cfg, which, 1e-4);
        CHECK(std::abs(a.lhs - o.lhs) < 1e-8);
        CHECK(std::abs(a.rhs - o.rhs) < 1e-6);
        CHECK(o.residual < 1e-6);
      }
    }
  }
}

TEST_CASE("mode b variant runs and matches for symmetric inputs") {
  SystemConfig cfg;
  cfg.mode_a = {0.6, 0.4};
  cfg.mode_b = {0.6, 0.4};
  cfg.phi = std::numbers::pi / 2.0;
  cfg.coupling = {CouplingKind::Linear, 0.8, 1.0};
  const IdentityResult a =
      check_identity(cfg, IdentityKind::TwoPhoton, 1e-4, WhichMode::A);
  const IdentityResult b =
      check_identity(cfg, IdentityKind::TwoPhoton, 1e-4, WhichMode::B);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-8));
}

TEST_CASE("step bounds are enforced") {
  SystemConfig cfg;
  cfg.coupling = {CouplingKind::Linear, 1.0, 1.0};
  CHECK_THROWS_AS(check_identity(cfg, IdentityKind::OnePhoton, 1e-7), ConfigError);
  CHECK_THROWS_AS(check_identity(cfg, IdentityKind::OnePhoton, 0.1), ConfigError);
}

TEST_CASE("extrema location on the standard 201-point grid") {
  const int count = 201;
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i)
    grid[i] = std::min((std::numbers::pi / 2.0) * i / (count - 1),
                       std::numbers::pi / 2.0 - 1e-9);

  SystemConfig vac;
  vac.mode_a = {0.1, std::sqrt(0.11)};
  vac.mode_b = {0.0, 0.0};
  vac.phi = std::numbers::pi / 2.0;
  vac.coupling = {CouplingKind::Linear, 0.0, 1.0};
  const ExtremaReport one =
      locate_extrema(vac, ExtremaPair::OnePhotonVsPopulation, grid);
  CHECK(one.argmax_index == 100);  // psi = pi/4
  CHECK(std::abs(one.separation) <= 1);

  SystemConfig eq;
  eq.mode_a = {0.1, std::sqrt(0.11)};
  eq.mode_b = eq.mode_a;
  eq.phi = std::numbers::pi / 2.0;
  eq.coupling = {CouplingKind::Linear, 0.0, 1.0};
  const ExtremaReport two =
      locate_extrema(eq, ExtremaPair::TwoPhotonDegreeVsSingleDegree, grid);
  CHECK(two.argmax_index == 100);
  CHECK(std::abs(two.separation) <= 1);
}

TEST_CASE("coarse grids are rejected") {
  SystemConfig cfg;
  cfg.mode_a = {0.1, 0.1};
  cfg.coupling = {CouplingKind::Linear, 0.0, 1.0};
  const std::vector<double> tiny = {0.1, 0.2};
  CHECK_THROWS_AS(locate_extrema(cfg, ExtremaPair::OnePhotonVsPopulation, tiny),
                  GridTooCoarseError);
}

}  // TEST_SUITE
