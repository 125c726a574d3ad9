#include "gaussduet/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gaussduet/analytic.hpp"
#include "gaussduet/observables.hpp"
#include "gaussduet/oracle.hpp"

namespace gaussduet {
namespace sweepkit {

namespace {

using json = nlohmann::json;

constexpr double kPsiCap = std::numbers::pi / 2.0 - 1e-9;

const std::vector<std::string> kAxisNames = {"t", "psi", "chi", "g", "n", "phi"};

int worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GAUSSDUET_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Static index striding; results land in preallocated slots so assembly
// order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < n; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

double get_or(const std::map<std::string, double>& params, const std::string& key,
              double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double require(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ConfigError("missing parameter: " + key);
  return it->second;
}

double squeeze_for(const SweepSpec& spec,
                   const std::map<std::string, double>& params, double n) {
  switch (spec.mrule) {
    case MRule::Ideal: return std::sqrt(n * (n + 1.0));
    case MRule::Classical: return n;
    case MRule::Fixed: return require(params, "m");
  }
  throw ConfigError("bad mrule");
}

struct RowQuantities {
  MomentSet ms;
  VarianceSet vs;
  CorrelationDegrees deg;
  double w = 0.0;
  double u = 0.0;
  double angle = 0.0;
  double oracle_maxdev = 0.0;
};

RowQuantities evaluate_point(const ResolvedPoint& pt) {
  RowQuantities q;
  if (pt.t) {
    q.ms = moments(pt.config, *pt.t);
    q.vs = variances(pt.config, *pt.t);
    q.w = envelope_w(pt.config.coupling, *pt.t);
    q.u = envelope_u(pt.config.coupling, *pt.t);
  } else {
    q.ms = steady_moments(pt.config);
    q.vs = steady_variances(pt.config);
    q.w = steady_envelope_w(pt.config.coupling);
    q.u = steady_envelope_u(pt.config.coupling);
  }
  q.deg = degrees(q.ms);
  q.angle = scaled_coupling(pt.config.coupling).angle;
  const MomentSet om = pt.t ? oracle::moments(pt.config, *pt.t)
                            : oracle::steady_moments(pt.config);
  double dev = 0.0;
  dev = std::max(dev, std::abs(q.ms.pop_a - om.pop_a));
  dev = std::max(dev, std::abs(q.ms.pop_b - om.pop_b));
  dev = std::max(dev, std::abs(q.ms.c_aa - om.c_aa));
  dev = std::max(dev, std::abs(q.ms.c_bb - om.c_bb));
  dev = std::max(dev, std::abs(q.ms.c_adagb - om.c_adagb));
  dev = std::max(dev, std::abs(q.ms.c_ab - om.c_ab));
  q.oracle_maxdev = dev;
  return q;
}

std::optional<double> output_value(const RowQuantities& q, const std::string& name) {
  const MomentSet& ms = q.ms;
  const VarianceSet& vs = q.vs;
  if (name == "pop_a") return ms.pop_a;
  if (name == "pop_b") return ms.pop_b;
  if (name == "re_caa") return ms.c_aa.real();
  if (name == "im_caa") return ms.c_aa.imag();
  if (name == "abs_caa") return std::abs(ms.c_aa);
  if (name == "re_cbb") return ms.c_bb.real();
  if (name == "im_cbb") return ms.c_bb.imag();
  if (name == "abs_cbb") return std::abs(ms.c_bb);
  if (name == "re_cadagb") return ms.c_adagb.real();
  if (name == "im_cadagb") return ms.c_adagb.imag();
  if (name == "abs_cadagb") return std::abs(ms.c_adagb);
  if (name == "re_cab") return ms.c_ab.real();
  if (name == "im_cab") return ms.c_ab.imag();
  if (name == "abs_cab") return std::abs(ms.c_ab);
  if (name == "xx_a") return vs.xx_a;
  if (name == "yy_a") return vs.yy_a;
  if (name == "xx_b") return vs.xx_b;
  if (name == "yy_b") return vs.yy_b;
  if (name == "xy_a") return vs.xy_a;
  if (name == "xy_b") return vs.xy_b;
  if (name == "eta_aa") return q.deg.eta_aa;
  if (name == "eta_bb") return q.deg.eta_bb;
  if (name == "gamma_ab") return q.deg.gamma_ab;
  if (name == "eta_ab") return q.deg.eta_ab;
  if (name == "visibility") return q.deg.visibility;
  if (name == "w") return q.w;
  if (name == "u") return q.u;
  if (name == "angle") return q.angle;
  throw ConfigError("unknown output: " + name);
}

std::string unit_suffix(const std::string& name) {
  if (name == "psi" || name == "phi") return "[rad]";
  if (name == "chi") return "[1]";
  if (name == "t") return "[1/kappa]";
  if (name == "g") return "[rate]";
  if (name == "n") return "[photons]";
  return "";
}

std::vector<double> linspace(const Axis& axis) {
  std::vector<double> v(axis.count);
  for (int i = 0; i < axis.count; ++i)
    v[i] = axis.min + (axis.max - axis.min) * i / (axis.count - 1);
  return v;
}

}  // namespace

Scenario parse_scenario(const std::string& name) {
  if (name == "equalSqueezed") return Scenario::EqualSqueezed;
  if (name == "equalPopUnequalSqueeze") return Scenario::EqualPopUnequalSqueeze;
  if (name == "squeezedPlusVacuum") return Scenario::SqueezedPlusVacuum;
  if (name == "squeezedPlusThermal") return Scenario::SqueezedPlusThermal;
  if (name == "custom") return Scenario::Custom;
  throw ConfigError("unknown scenario: " + name);
}

MRule parse_mrule(const std::string& name) {
  if (name == "fixed") return MRule::Fixed;
  if (name == "ideal") return MRule::Ideal;
  if (name == "classical") return MRule::Classical;
  throw ConfigError("unknown mrule: " + name);
}

const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> names = {
      "pop_a", "pop_b", "re_caa", "im_caa", "abs_caa", "re_cbb", "im_cbb",
      "abs_cbb", "re_cadagb", "im_cadagb", "abs_cadagb", "re_cab", "im_cab",
      "abs_cab", "xx_a", "yy_a", "xx_b", "yy_b", "xy_a", "xy_b", "eta_aa",
      "eta_bb", "gamma_ab", "eta_ab", "visibility", "w", "u", "angle"};
  return names;
}

void validate_spec(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw ConfigError("sweep needs 1 or 2 axes");
  for (const auto& axis : spec.axes) {
    if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.name) ==
        kAxisNames.end())
      throw ConfigError("unknown axis parameter: " + axis.name);
    if (axis.count < 2) throw ConfigError("axis count must be at least 2");
    if (!(axis.max > axis.min)) throw ConfigError("axis max must exceed min");
    if (spec.fixed.contains(axis.name))
      throw ConfigError("parameter both swept and fixed: " + axis.name);
  }
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name)
    throw ConfigError("duplicate axis parameter");
  if (spec.outputs.empty()) throw ConfigError("no outputs requested");
  for (const auto& name : spec.outputs)
    if (std::find(known_outputs().begin(), known_outputs().end(), name) ==
        known_outputs().end())
      throw ConfigError("unknown output: " + name);
}

ResolvedPoint resolve_point(const SweepSpec& spec,
                            const std::map<std::string, double>& overrides) {
  std::map<std::string, double> params = spec.fixed;
  for (const auto& [k, v] : overrides) params[k] = v;

  ResolvedPoint pt;
  pt.config.coupling.kind = spec.kind;
  const double kappa = get_or(params, "kappa", 1.0);
  pt.config.coupling.kappa = kappa;
  if (params.contains("g")) {
    pt.config.coupling.g = params.at("g");
  } else if (params.contains("psi")) {
    if (spec.kind != CouplingKind::Linear)
      throw ConfigError("psi applies to the linear coupling");
    pt.config.coupling.g = kappa * std::tan(std::min(params.at("psi"), kPsiCap));
  } else if (params.contains("chi")) {
    if (spec.kind != CouplingKind::Nonlinear)
      throw ConfigError("chi applies to the nonlinear coupling");
    pt.config.coupling.g = kappa * std::tanh(params.at("chi"));
  }
  pt.config.phi = reduce_phase(get_or(params, "phi", 0.0));

  switch (spec.scenario) {
    case Scenario::Custom: {
      pt.config.mode_a = {get_or(params, "na", 0.0), get_or(params, "ma", 0.0)};
      pt.config.mode_b = {get_or(params, "nb", 0.0), get_or(params, "mb", 0.0)};
      break;
    }
    case Scenario::EqualSqueezed: {
      const double n = require(params, "n");
      const double m = squeeze_for(spec, params, n);
      pt.config.mode_a = {n, m};
      pt.config.mode_b = {n, m};
      break;
    }
    case Scenario::EqualPopUnequalSqueeze: {
      const double n = require(params, "n");
      pt.config.mode_a = {n, require(params, "ma")};
      pt.config.mode_b = {n, require(params, "mb")};
      break;
    }
    case Scenario::SqueezedPlusVacuum: {
      const double n = require(params, "n");
      pt.config.mode_a = {n, squeeze_for(spec, params, n)};
      pt.config.mode_b = {0.0, 0.0};
      break;
    }
    case Scenario::SqueezedPlusThermal: {
      const double n = require(params, "n");
      pt.config.mode_a = {n, squeeze_for(spec, params, n)};
      pt.config.mode_b = {n, 0.0};
      break;
    }
  }
  pt.config = clamped(pt.config);
  if (params.contains("t"))
    pt.t = params.at("t");
  else if (!spec.steady)
    throw ConfigError("finite-time sweep requires a t axis or fixed t");
  return pt;
}

SweepTable run_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  SweepTable table;
  for (const auto& axis : spec.axes) table.columns.push_back(axis.name);
  for (const auto& name : spec.outputs) table.columns.push_back(name);
  table.columns.push_back("oracle_maxdev");

  const std::vector<double> outer = linspace(spec.axes[0]);
  const std::vector<double> inner =
      spec.axes.size() == 2 ? linspace(spec.axes[1]) : std::vector<double>{0.0};
  const std::size_t total = outer.size() * inner.size();
  table.rows.resize(total);

  parallel_for(total, [&](std::size_t idx) {
    const std::size_t io = idx / inner.size();
    const std::size_t ii = idx % inner.size();
    std::map<std::string, double> overrides;
    overrides[spec.axes[0].name] = outer[io];
    if (spec.axes.size() == 2) overrides[spec.axes[1].name] = inner[ii];
    const RowQuantities q = evaluate_point(resolve_point(spec, overrides));
    std::vector<std::optional<double>> row;
    row.reserve(table.columns.size());
    row.emplace_back(outer[io]);
    if (spec.axes.size() == 2) row.emplace_back(inner[ii]);
    for (const auto& name : spec.outputs) row.push_back(output_value(q, name));
    row.emplace_back(q.oracle_maxdev);
    table.rows[idx] = std::move(row);
  });
  return table;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c] + unit_suffix(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_double(*row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json rec = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c])
        rec[table.columns[c]] = *row[c];
      else
        rec[table.columns[c]] = nullptr;
    }
    rows.push_back(std::move(rec));
  }
  return rows.dump(2) + "\n";
}

namespace {

json spec_meta(const SweepSpec& spec) {
  json meta;
  switch (spec.scenario) {
    case Scenario::EqualSqueezed: meta["scenario"] = "equalSqueezed"; break;
    case Scenario::EqualPopUnequalSqueeze:
      meta["scenario"] = "equalPopUnequalSqueeze";
      break;
    case Scenario::SqueezedPlusVacuum: meta["scenario"] = "squeezedPlusVacuum"; break;
    case Scenario::SqueezedPlusThermal:
      meta["scenario"] = "squeezedPlusThermal";
      break;
    case Scenario::Custom: meta["scenario"] = "custom"; break;
  }
  meta["kind"] = spec.kind == CouplingKind::Linear ? "linear" : "nonlinear";
  meta["mrule"] = spec.mrule == MRule::Ideal      ? "ideal"
                  : spec.mrule == MRule::Classical ? "classical"
                                                   : "fixed";
  meta["steady"] = spec.steady;
  meta["fixed"] = spec.fixed;
  json axes = json::array();
  for (const auto& axis : spec.axes)
    axes.push_back({{"name", axis.name},
                    {"min", axis.min},
                    {"max", axis.max},
                    {"count", axis.count}});
  meta["axes"] = axes;
  meta["outputs"] = spec.outputs;
  return meta;
}

json extrema_meta(const relations::ExtremaReport& rep) {
  return {{"argmax_index", rep.argmax_index},
          {"argmax_angle", rep.argmax_angle},
          {"inflection_index", rep.inflection_index},
          {"inflection_angle", rep.inflection_angle},
          {"separation_cells", rep.separation}};
}

std::vector<double> psi_grid(int count) {
  Axis axis{"psi", 0.0, std::numbers::pi / 2.0, count};
  std::vector<double> grid = linspace(axis);
  for (double& v : grid) v = std::min(v, kPsiCap);
  return grid;
}

constexpr int kFigureGrid = 201;

FigureOutput figure_fig8b() {
  // Two equally squeezed series (ideal and classical m) merged column-wise.
  SweepSpec spec;
  spec.kind = CouplingKind::Linear;
  spec.scenario = Scenario::EqualSqueezed;
  spec.axes = {{"psi", 0.0, std::numbers::pi / 2.0, kFigureGrid}};
  spec.fixed = {{"n", 0.1}, {"phi", std::numbers::pi / 2.0}, {"kappa", 1.0}};
  spec.outputs = {"eta_aa", "eta_ab"};

  FigureOutput out;
  out.table.columns = {"psi", "eta_aa_ideal", "eta_ab_ideal",
                       "eta_aa_classical", "eta_ab_classical", "oracle_maxdev"};
  json meta = spec_meta(spec);
  meta["id"] = "fig8b";
  meta["series"] = {"m=sqrt(n(n+1))", "m=n"};

  bool first = true;
  for (const MRule rule : {MRule::Ideal, MRule::Classical}) {
    spec.mrule = rule;
    const SweepTable part = run_sweep(spec);
    if (first) {
      out.table.rows.resize(part.rows.size());
      for (std::size_t r = 0; r < part.rows.size(); ++r)
        out.table.rows[r] = {part.rows[r][0], part.rows[r][1], part.rows[r][2],
                             std::nullopt, std::nullopt, part.rows[r][3]};
      first = false;
    } else {
      for (std::size_t r = 0; r < part.rows.size(); ++r) {
        out.table.rows[r][3] = part.rows[r][1];
        out.table.rows[r][4] = part.rows[r][2];
        const double dev = std::max(*out.table.rows[r][5], *part.rows[r][3]);
        out.table.rows[r][5] = dev;
      }
    }
    const ResolvedPoint pt = resolve_point(spec, {{"psi", 0.1}});
    const auto rep = relations::locate_extrema(
        pt.config, relations::ExtremaPair::TwoPhotonDegreeVsSingleDegree,
        psi_grid(kFigureGrid));
    meta[rule == MRule::Ideal ? "extrema_ideal" : "extrema_classical"] =
        extrema_meta(rep);
  }
  out.meta_json = meta.dump(2) + "\n";
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2a", "fig3u", "fig3", "fig5",
                                               "fig6", "fig7", "fig8a", "fig8b"};
  return ids;
}

FigureOutput make_figure(const std::string& id) {
  const double half_pi = std::numbers::pi / 2.0;
  SweepSpec spec;
  spec.fixed["kappa"] = 1.0;

  if (id == "fig8b") return figure_fig8b();

  if (id == "fig2a") {
    spec.kind = CouplingKind::Linear;
    spec.scenario = Scenario::SqueezedPlusVacuum;
    spec.mrule = MRule::Ideal;
    spec.axes = {{"psi", 0.0, half_pi, kFigureGrid}};
    spec.fixed["n"] = 0.5;
    spec.fixed["phi"] = 0.0;
    spec.outputs = {"pop_a", "pop_b", "abs_caa", "abs_cbb"};
  } else if (id == "fig3u") {
    spec.kind = CouplingKind::Linear;
    spec.scenario = Scenario::EqualSqueezed;
    spec.mrule = MRule::Ideal;
    spec.axes = {{"psi", 0.0, half_pi, kFigureGrid}, {"n", 0.02, 3.0, kFigureGrid}};
    spec.fixed["phi"] = half_pi;
    spec.outputs = {"eta_aa"};
  } else if (id == "fig3") {
    spec.kind = CouplingKind::Linear;
    spec.scenario = Scenario::SqueezedPlusVacuum;
    spec.mrule = MRule::Fixed;
    spec.axes = {{"t", 0.0, 3.0, kFigureGrid}, {"psi", 0.0, half_pi, kFigureGrid}};
    spec.fixed["n"] = 0.5;
    spec.fixed["m"] = 0.0;
    spec.fixed["phi"] = 0.0;
    spec.outputs = {"visibility"};
    spec.steady = false;
  } else if (id == "fig5") {
    spec.kind = CouplingKind::Nonlinear;
    spec.scenario = Scenario::EqualSqueezed;
    spec.mrule = MRule::Ideal;
    spec.axes = {{"chi", 0.0, 3.0, kFigureGrid}, {"n", 0.02, 3.0, kFigureGrid}};
    spec.fixed["phi"] = 0.0;
    spec.outputs = {"yy_a", "yy_b"};
  } else if (id == "fig6" || id == "fig7") {
    spec.kind = CouplingKind::Nonlinear;
    spec.scenario = Scenario::EqualSqueezed;
    spec.mrule = MRule::Ideal;
    spec.axes = {{"chi", 0.0, 3.0, kFigureGrid}, {"n", 0.02, 3.0, kFigureGrid}};
    spec.fixed["phi"] = 0.0;
    spec.outputs = {id == "fig6" ? "gamma_ab" : "eta_ab"};
  } else if (id == "fig8a") {
    spec.kind = CouplingKind::Linear;
    spec.scenario = Scenario::SqueezedPlusVacuum;
    spec.mrule = MRule::Ideal;
    spec.axes = {{"psi", 0.0, half_pi, kFigureGrid}};
    spec.fixed["n"] = 0.1;
    spec.fixed["phi"] = half_pi;
    spec.outputs = {"pop_a", "pop_b", "abs_cadagb"};
  } else {
    throw ConfigError("unknown figure id: " + id);
  }

  FigureOutput out;
  out.table = run_sweep(spec);
  json meta = spec_meta(spec);
  meta["id"] = id;
  if (id == "fig8a") {
    const ResolvedPoint pt = resolve_point(spec, {{"psi", 0.1}});
    meta["extrema"] = extrema_meta(relations::locate_extrema(
        pt.config, relations::ExtremaPair::OnePhotonVsPopulation,
        psi_grid(kFigureGrid)));
  }
  out.meta_json = meta.dump(2) + "\n";
  return out;
}

}  // namespace sweepkit
}  // namespace gaussduet
