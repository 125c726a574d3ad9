#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaussduet/model.hpp"
#include "gaussduet/relations.hpp"

namespace gaussduet {
namespace sweepkit {

enum class Scenario {
  EqualSqueezed,
  EqualPopUnequalSqueeze,
  SqueezedPlusVacuum,
  SqueezedPlusThermal,
  Custom,
};

/// How the squeezing magnitude follows n on an n-axis: Fixed uses the given
/// m, Ideal sets m = sqrt(n(n+1)), Classical sets m = n.
enum class MRule { Fixed, Ideal, Classical };

struct Axis {
  std::string name;  // one of t, psi, chi, g, n, phi
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct SweepSpec {
  CouplingKind kind = CouplingKind::Linear;
  Scenario scenario = Scenario::Custom;
  MRule mrule = MRule::Fixed;
  std::vector<Axis> axes;               // 1 or 2 axes
  std::map<std::string, double> fixed;  // na, ma, nb, mb, n, m, phi, g, kappa, t
  std::vector<std::string> outputs;
  bool steady = true;  // ignored when a t axis or fixed t is present
};

Scenario parse_scenario(const std::string& name);
MRule parse_mrule(const std::string& name);

/// Known output column names.
const std::vector<std::string>& known_outputs();

/// Throws ConfigError on malformed specs (axis count, duplicate names,
/// unknown outputs, count < 2).
void validate_spec(const SweepSpec& spec);

struct SweepTable {
  std::vector<std::string> columns;  // axis columns, outputs, oracle_maxdev
  std::vector<std::vector<std::optional<double>>> rows;  // outer axis major
};

/// Evaluates the sweep on the full grid. Grid points run concurrently under
/// a bounded worker pool (capped by GAUSSDUET_THREADS); row order is
/// deterministic, outer axis major.
SweepTable run_sweep(const SweepSpec& spec);

/// Shortest round-trip decimal formatting; identical invocations produce
/// byte-identical files.
std::string format_double(double v);
std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);

/// Resolved single grid point, exposed for the `moments` command.
struct ResolvedPoint {
  SystemConfig config;
  std::optional<double> t;  // nullopt = steady state
};

ResolvedPoint resolve_point(const SweepSpec& spec,
                            const std::map<std::string, double>& overrides);

struct FigureOutput {
  SweepTable table;
  std::string meta_json;  // parameters and, for fig8*, extrema reports
};

/// Figure-reproduction presets: fig2a, fig3u, fig3, fig5, fig6, fig7,
/// fig8a, fig8b. Throws ConfigError for unknown ids.
FigureOutput make_figure(const std::string& id);
const std::vector<std::string>& figure_ids();

}  // namespace sweepkit
}  // namespace gaussduet
