#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "gaussduet/sweep.hpp"

using namespace gaussduet;
using namespace gaussduet::sweepkit;

TEST_SUITE("sweep") {

TEST_CASE("spec validation") {
  SweepSpec spec;
  spec.outputs = {"pop_a"};

  // No axes.
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Degenerate axis.
  spec.axes = {{"psi", 0.0, 1.0, 1}};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Unknown axis parameter.
  spec.axes = {{"bogus", 0.0, 1.0, 5}};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Duplicate axes.
  spec.axes = {{"psi", 0.0, 1.0, 5}, {"psi", 0.0, 1.0, 5}};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Swept parameter also fixed.
  spec.axes = {{"psi", 0.0, 1.0, 5}};
  spec.fixed = {{"psi", 0.3}};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Unknown output.
  spec.fixed.clear();
  spec.outputs = {"nope"};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);
  // Inverted bounds.
  spec.outputs = {"pop_a"};
  spec.axes = {{"psi", 1.0, 0.0, 5}};
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);

  spec.axes = {{"psi", 0.0, 1.0, 5}};
  CHECK_NOTHROW(validate_spec(spec));
}

TEST_CASE("scenario resolution") {
  SweepSpec spec;
  spec.kind = CouplingKind::Linear;
  spec.scenario = Scenario::EqualSqueezed;
  spec.mrule = MRule::Ideal;
  spec.fixed = {{"n", 0.5}, {"phi", 1.0}, {"kappa", 2.0}};

  const ResolvedPoint eq = resolve_point(spec, {{"psi", std::numbers::pi / 4.0}});
  CHECK(eq.config.mode_a.n == 0.5);
  CHECK(eq.config.mode_a.m == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(eq.config.mode_b.m == eq.config.mode_a.m);
  CHECK(eq.config.coupling.g == doctest::Approx(2.0).epsilon(1e-12));  // kappa tan(pi/4)
  CHECK_FALSE(eq.t.has_value());

  spec.mrule = MRule::Classical;
  CHECK(resolve_point(spec, {}).config.mode_a.m == 0.5);

  spec.scenario = Scenario::SqueezedPlusVacuum;
  spec.mrule = MRule::Ideal;
  const ResolvedPoint vac = resolve_point(spec, {});
  CHECK(vac.config.mode_b.n == 0.0);
  CHECK(vac.config.mode_b.m == 0.0);

  spec.scenario = Scenario::SqueezedPlusThermal;
  const ResolvedPoint th = resolve_point(spec, {});
  CHECK(th.config.mode_b.n == 0.5);
  CHECK(th.config.mode_b.m == 0.0);

  spec.scenario = Scenario::Custom;
  spec.fixed = {{"na", 0.3}, {"ma", 0.2}, {"nb", 0.1}, {"g", 0.7}, {"t", 1.5}};
  const ResolvedPoint cu = resolve_point(spec, {});
  CHECK(cu.config.mode_a.n == 0.3);
  CHECK(cu.config.mode_b.m == 0.0);
  CHECK(cu.config.coupling.g == 0.7);
  CHECK(*cu.t == 1.5);

  // Missing required scenario parameter.
  spec.scenario = Scenario::EqualSqueezed;
  spec.fixed = {{"kappa", 1.0}};
  CHECK_THROWS_AS(resolve_point(spec, {}), ConfigError);
  // chi on a linear sweep is a mismatch.
  spec.kind = CouplingKind::Linear;
  spec.fixed = {{"n", 0.5}, {"chi", 0.5}};
  spec.mrule = MRule::Ideal;
  CHECK_THROWS_AS(resolve_point(spec, {}), ConfigError);
}

TEST_CASE("single-axis sweep values match the closed forms") {
  SweepSpec spec;
  spec.kind = CouplingKind::Linear;
  spec.scenario = Scenario::SqueezedPlusVacuum;
  spec.mrule = MRule::Fixed;
  spec.fixed = {{"n", 0.5}, {"m", 0.0}};
  spec.axes = {{"psi", 0.0, std::numbers::pi / 2.0, 41}};
  spec.outputs = {"visibility", "pop_a"};

  const SweepTable table = run_sweep(spec);
  REQUIRE(table.rows.size() == 41);
  CHECK(table.columns ==
        std::vector<std::string>{"psi", "visibility", "pop_a", "oracle_maxdev"});
  for (const auto& row : table.rows) {
    const double psi = *row[0];
    CHECK(*row[1] ==
          doctest::Approx(std::sin(psi) * std::cos(psi)).epsilon(1e-7));
    CHECK(*row[3] < 1e-10);  // oracle deviation column
  }
}

TEST_CASE("two-axis sweeps are outer-axis major and thread-invariant") {
  SweepSpec spec;
  spec.kind = CouplingKind::Linear;
  spec.scenario = Scenario::EqualSqueezed;
  spec.mrule = MRule::Ideal;
  spec.fixed = {{"phi", std::numbers::pi / 2.0}};
  spec.axes = {{"psi", 0.0, 1.5, 7}, {"n", 0.1, 1.0, 5}};
  spec.outputs = {"eta_aa", "eta_ab"};

  const std::string multi = to_csv(run_sweep(spec));
  setenv("GAUSSDUET_THREADS", "1", 1);
  const std::string serial = to_csv(run_sweep(spec));
  unsetenv("GAUSSDUET_THREADS");
  CHECK(multi == serial);  // byte identical regardless of worker count

  const SweepTable table = run_sweep(spec);
  REQUIRE(table.rows.size() == 35);
  // Outer axis (psi) varies slowest.
  CHECK(*table.rows[0][0] == *table.rows[4][0]);
  CHECK(*table.rows[0][0] != *table.rows[5][0]);
  CHECK(*table.rows[0][1] != *table.rows[1][1]);
}

TEST_CASE("undefined degrees become empty CSV cells and JSON nulls") {
  SweepSpec spec;
  spec.kind = CouplingKind::Linear;
  spec.scenario = Scenario::Custom;  // all-vacuum inputs: degrees undefined
  spec.axes = {{"psi", 0.0, 1.0, 3}};
  spec.outputs = {"eta_aa", "pop_a"};

  const SweepTable table = run_sweep(spec);
  const std::string csv = to_csv(table);
  CHECK(csv.find("nan") == std::string::npos);
  CHECK(csv.find("inf") == std::string::npos);
  CHECK(csv.find(",,") != std::string::npos);  // empty eta_aa cell
  CHECK(csv.rfind("psi[rad],eta_aa,pop_a,oracle_maxdev\n", 0) == 0);

  const std::string json = to_json(table);
  CHECK(json.find("null") != std::string::npos);
  CHECK(json.find("nan") == std::string::npos);
}

TEST_CASE("float formatting is shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.25) == "-2.25");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(format_double(third)) == third);
}

TEST_CASE("figure presets") {
  CHECK(figure_ids().size() == 8);
  CHECK_THROWS_AS(make_figure("fig99"), ConfigError);

  const FigureOutput fig = make_figure("fig2a");
  REQUIRE(fig.table.rows.size() == 201);
  const auto& last = fig.table.rows.back();
  // Populations converge pairwise to 0.25 and the correlations to 0.433013
  // at psi = pi/2.
  CHECK(*last[1] == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(*last[2] == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(*last[3] == doctest::Approx(0.4330127).epsilon(1e-6));
  CHECK(*last[4] == doctest::Approx(0.4330127).epsilon(1e-6));
  CHECK(fig.meta_json.find("\"id\"") != std::string::npos);

  const FigureOutput f8 = make_figure("fig8b");
  CHECK(f8.meta_json.find("extrema_ideal") != std::string::npos);
  CHECK(f8.meta_json.find("extrema_classical") != std::string::npos);
  CHECK(f8.table.columns.size() == 6);
}

}  // TEST_SUITE
