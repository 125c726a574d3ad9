// gaussduet command-line front end: single-point evaluation, parameter
// sweeps, figure-data reproduction, verification runs, and derivative
// identity checks. All numbers come from the library; the CLI only formats.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussduet/analytic.hpp"
#include "gaussduet/errors.hpp"
#include "gaussduet/model.hpp"
#include "gaussduet/observables.hpp"
#include "gaussduet/oracle.hpp"
#include "gaussduet/relations.hpp"
#include "gaussduet/sweep.hpp"
#include "gaussduet/verify.hpp"

namespace {

using gaussduet::sweepkit::format_double;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStability = 3;

struct ConfigFlags {
  std::string kind = "linear";
  double g = 0.0;
  double kappa = 1.0;
  double na = 0.0;
  double ma = 0.0;
  double nb = 0.0;
  double mb = 0.0;
  double phi = 0.0;
  std::optional<double> t;
  bool steady = false;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool with_time) {
  // Later occurrences win so config-file values can be overridden on the
  // command line.
  cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_option("--kind", f.kind, "Coupling kind")
      ->check(CLI::IsMember({"linear", "nonlinear"}))
      ->capture_default_str();
  cmd->add_option("--g", f.g, "Coupling strength")->capture_default_str();
  cmd->add_option("--kappa", f.kappa, "Loss rate")->capture_default_str();
  cmd->add_option("--na", f.na, "Mode a reservoir occupation")->capture_default_str();
  cmd->add_option("--ma", f.ma, "Mode a squeezing magnitude")->capture_default_str();
  cmd->add_option("--nb", f.nb, "Mode b reservoir occupation")->capture_default_str();
  cmd->add_option("--mb", f.mb, "Mode b squeezing magnitude")->capture_default_str();
  cmd->add_option("--phi", f.phi, "Mode a squeezing phase [rad]")->capture_default_str();
  if (with_time) {
    auto* topt = cmd->add_option("--t", f.t, "Evaluation time");
    cmd->add_flag("--steady", f.steady, "Steady state")->excludes(topt);
  }
}

gaussduet::SystemConfig to_config(const ConfigFlags& f) {
  gaussduet::CouplingConfig coupling;
  coupling.kind = f.kind == "linear" ? gaussduet::CouplingKind::Linear
                                     : gaussduet::CouplingKind::Nonlinear;
  coupling.g = f.g;
  coupling.kappa = f.kappa;
  return gaussduet::make_system_config({f.na, f.ma}, {f.nb, f.mb}, f.phi,
                                       coupling);
}

std::string fmt_complex(std::complex<double> z) {
  std::string s = format_double(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += format_double(std::abs(z.imag())) + "i";
  return s;
}

std::string fmt_degree(const std::optional<double>& d) {
  return d ? format_double(*d) : "undefined";
}

const char* squeezing_name(gaussduet::SqueezingClass c) {
  switch (c) {
    case gaussduet::SqueezingClass::Quantum: return "quantum";
    case gaussduet::SqueezingClass::Classical: return "classical";
    default: return "none";
  }
}

void print_pair(const char* name, const std::string& a, const std::string& o) {
  std::printf("%-12s %-26s %s\n", name, a.c_str(), o.c_str());
}

int cmd_moments(const ConfigFlags& flags) {
  if (!flags.t && !flags.steady) {
    std::cerr << "error: pass --t <time> or --steady\n";
    return kExitUsage;
  }
  const gaussduet::SystemConfig config = to_config(flags);
  gaussduet::MomentSet am, om;
  if (flags.t) {
    am = gaussduet::moments(config, *flags.t);
    om = gaussduet::oracle::moments(config, *flags.t);
  } else {
    am = gaussduet::steady_moments(config);
    om = gaussduet::oracle::steady_moments(config);
  }
  const gaussduet::VarianceSet avs = gaussduet::variances_from_moments(am);
  const gaussduet::CorrelationDegrees deg = gaussduet::degrees(am);
  gaussduet::Verdicts verdicts = gaussduet::entanglement_check(deg);
  const gaussduet::Verdicts sq = gaussduet::squeezing_report(avs);
  verdicts.xx_a = sq.xx_a;
  verdicts.yy_a = sq.yy_a;
  verdicts.xx_b = sq.xx_b;
  verdicts.yy_b = sq.yy_b;

  std::printf("config: %s\n", gaussduet::verify::describe(config).c_str());
  std::printf("time: %s\n",
              flags.t ? format_double(*flags.t).c_str() : "steady");
  std::printf("%-12s %-26s %s\n", "quantity", "analytic", "oracle");
  print_pair("pop_a", format_double(am.pop_a), format_double(om.pop_a));
  print_pair("pop_b", format_double(am.pop_b), format_double(om.pop_b));
  print_pair("c_aa", fmt_complex(am.c_aa), fmt_complex(om.c_aa));
  print_pair("c_bb", fmt_complex(am.c_bb), fmt_complex(om.c_bb));
  print_pair("c_adagb", fmt_complex(am.c_adagb), fmt_complex(om.c_adagb));
  print_pair("c_ab", fmt_complex(am.c_ab), fmt_complex(om.c_ab));
  std::printf("variances: xx_a=%s yy_a=%s xy_a=%s xx_b=%s yy_b=%s xy_b=%s\n",
              format_double(avs.xx_a).c_str(), format_double(avs.yy_a).c_str(),
              format_double(avs.xy_a).c_str(), format_double(avs.xx_b).c_str(),
              format_double(avs.yy_b).c_str(), format_double(avs.xy_b).c_str());
  std::printf(
      "degrees: eta_aa=%s eta_bb=%s gamma_ab=%s eta_ab=%s visibility=%s\n",
      fmt_degree(deg.eta_aa).c_str(), fmt_degree(deg.eta_bb).c_str(),
      fmt_degree(deg.gamma_ab).c_str(), fmt_degree(deg.eta_ab).c_str(),
      fmt_degree(deg.visibility).c_str());
  std::printf(
      "squeezing: xx_a=%s yy_a=%s xx_b=%s yy_b=%s\n",
      squeezing_name(verdicts.xx_a), squeezing_name(verdicts.yy_a),
      squeezing_name(verdicts.xx_b), squeezing_name(verdicts.yy_b));
  std::printf("entanglement: simple=%s cauchy_schwarz_a=%s cauchy_schwarz_b=%s\n",
              verdicts.entanglement_simple ? "yes" : "no",
              verdicts.entanglement_cs_a ? "yes" : "no",
              verdicts.entanglement_cs_b ? "yes" : "no");

  double dev = 0.0;
  dev = std::max(dev, std::abs(am.pop_a - om.pop_a));
  dev = std::max(dev, std::abs(am.pop_b - om.pop_b));
  dev = std::max(dev, std::abs(am.c_aa - om.c_aa));
  dev = std::max(dev, std::abs(am.c_bb - om.c_bb));
  dev = std::max(dev, std::abs(am.c_adagb - om.c_adagb));
  dev = std::max(dev, std::abs(am.c_ab - om.c_ab));
  std::printf("max_deviation: %s\n", format_double(dev).c_str());
  return kExitOk;
}

gaussduet::sweepkit::Axis parse_axis(const std::string& text) {
  gaussduet::sweepkit::Axis axis;
  std::istringstream is(text);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(is, field, ':')) fields.push_back(field);
  if (fields.size() != 4)
    throw gaussduet::ConfigError("axis must be name:min:max:count");
  axis.name = fields[0];
  try {
    axis.min = std::stod(fields[1]);
    axis.max = std::stod(fields[2]);
    axis.count = std::stoi(fields[3]);
  } catch (const std::exception&) {
    throw gaussduet::ConfigError("bad axis numbers in: " + text);
  }
  return axis;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gaussduet::ConfigError("cannot open output file: " + path);
  out << content;
}

struct SweepFlags {
  ConfigFlags config;
  std::string scenario = "custom";
  std::string mrule = "fixed";
  std::optional<double> n;
  std::optional<double> m;
  std::vector<std::string> axes;
  std::vector<std::string> outputs;
  std::string out;
  std::string format = "csv";
};

gaussduet::sweepkit::SweepSpec to_spec(const SweepFlags& f,
                                       const CLI::App* cmd) {
  namespace sk = gaussduet::sweepkit;
  sk::SweepSpec spec;
  spec.kind = f.config.kind == "linear" ? gaussduet::CouplingKind::Linear
                                        : gaussduet::CouplingKind::Nonlinear;
  spec.scenario = sk::parse_scenario(f.scenario);
  spec.mrule = sk::parse_mrule(f.mrule);
  for (const auto& text : f.axes) spec.axes.push_back(parse_axis(text));
  for (const auto& name : f.outputs) {
    std::istringstream is(name);
    std::string part;
    while (std::getline(is, part, ',')) spec.outputs.push_back(part);
  }
  auto set_if = [&](const char* flag, const char* key, double value) {
    if (cmd->count(flag)) spec.fixed[key] = value;
  };
  set_if("--g", "g", f.config.g);
  set_if("--kappa", "kappa", f.config.kappa);
  set_if("--na", "na", f.config.na);
  set_if("--ma", "ma", f.config.ma);
  set_if("--nb", "nb", f.config.nb);
  set_if("--mb", "mb", f.config.mb);
  set_if("--phi", "phi", f.config.phi);
  if (f.n) spec.fixed["n"] = *f.n;
  if (f.m) spec.fixed["m"] = *f.m;
  if (f.config.t) spec.fixed["t"] = *f.config.t;
  if (!spec.fixed.contains("kappa")) spec.fixed["kappa"] = 1.0;
  return spec;
}

int cmd_sweep(const SweepFlags& flags, const CLI::App* cmd) {
  namespace sk = gaussduet::sweepkit;
  const sk::SweepSpec spec = to_spec(flags, cmd);
  const sk::SweepTable table = sk::run_sweep(spec);
  write_file(flags.out, flags.format == "csv" ? sk::to_csv(table)
                                              : sk::to_json(table));
  return kExitOk;
}

int cmd_figure(const std::string& id, const std::string& dir) {
  namespace sk = gaussduet::sweepkit;
  const sk::FigureOutput fig = sk::make_figure(id);
  write_file(dir + "/" + id + ".csv", sk::to_csv(fig.table));
  write_file(dir + "/" + id + ".meta.json", fig.meta_json);
  std::cout << "wrote " << dir << "/" << id << ".csv and " << dir << "/" << id
            << ".meta.json\n";
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, int count) {
  const auto results = gaussduet::verify::run_all(seed, count);
  std::printf("%-22s %-14s %-10s %s\n", "suite", "max_residual", "tolerance",
              "status");
  for (const auto& r : results) {
    std::printf("%-22s %-14s %-10s %s\n", r.name.c_str(),
                format_double(r.max_residual).c_str(),
                format_double(r.tolerance).c_str(), r.pass ? "pass" : "FAIL");
    if (!r.pass)
      std::printf("  worst: %s (seed=%llu count=%d)\n", r.worst_config.c_str(),
                  static_cast<unsigned long long>(seed), count);
  }
  return gaussduet::verify::all_pass(results) ? kExitOk : kExitVerifyFail;
}

int cmd_relations(const ConfigFlags& flags, const std::string& which,
                  const std::string& mode, double h, bool richardson,
                  bool use_oracle) {
  namespace rel = gaussduet::relations;
  const gaussduet::SystemConfig config = to_config(flags);
  const rel::IdentityKind kind = which == "onephoton"
                                     ? rel::IdentityKind::OnePhoton
                                     : rel::IdentityKind::TwoPhoton;
  const rel::WhichMode wm =
      mode == "a" ? rel::WhichMode::A : rel::WhichMode::B;
  const rel::IdentityResult r =
      use_oracle ? rel::check_identity_oracle(config, kind, h, wm)
                 : rel::check_identity(config, kind, h, wm, richardson);
  std::printf("identity: %s mode=%s path=%s\n", which.c_str(), mode.c_str(),
              use_oracle ? "oracle" : "analytic");
  std::printf("lhs: %s\nrhs: %s\nresidual: %s\nstep: %s\n",
              format_double(r.lhs).c_str(), format_double(r.rhs).c_str(),
              format_double(r.residual).c_str(), format_double(r.step).c_str());
  return kExitOk;
}

// A flat key-value JSON config file is expanded into leading flags; explicit
// command-line flags win because they come later and options take the last
// value.
std::vector<std::string> expand_config_file(std::vector<std::string> args) {
  std::vector<std::string> out;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw gaussduet::ConfigError("--config needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (!path) return out;
  std::ifstream in(*path);
  if (!in) throw gaussduet::ConfigError("cannot read config file: " + *path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw gaussduet::ConfigError(std::string("bad config file: ") + e.what());
  }
  if (!doc.is_object())
    throw gaussduet::ConfigError("config file must be a flat JSON object");
  std::vector<std::string> expanded;
  if (!out.empty()) expanded.push_back(out.front());  // keep subcommand first
  for (const auto& [key, value] : doc.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) expanded.push_back("--" + key);
    } else if (value.is_string()) {
      expanded.push_back("--" + key);
      expanded.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      expanded.push_back("--" + key);
      expanded.push_back(format_double(value.get<double>()));
    } else {
      throw gaussduet::ConfigError("config value for '" + key +
                                   "' must be scalar");
    }
  }
  expanded.insert(expanded.end(), out.begin() + (out.empty() ? 0 : 1),
                  out.end());
  return expanded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian bosonic dynamics engine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ConfigFlags mflags;
  auto* moments_cmd = app.add_subcommand(
      "moments", "Single-point moments, variances, degrees and verdicts");
  add_config_flags(moments_cmd, mflags, true);
  moments_cmd->add_option("--config", "Flat JSON config file");

  SweepFlags sflags;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Grid sweep over 1 or 2 parameters");
  add_config_flags(sweep_cmd, sflags.config, true);
  sweep_cmd->add_option("--scenario", sflags.scenario,
                        "equalSqueezed|equalPopUnequalSqueeze|"
                        "squeezedPlusVacuum|squeezedPlusThermal|custom")
      ->capture_default_str();
  sweep_cmd->add_option("--mrule", sflags.mrule, "fixed|ideal|classical")
      ->capture_default_str();
  sweep_cmd->add_option("--n", sflags.n, "Common occupation (scenarios)");
  sweep_cmd->add_option("--m", sflags.m, "Fixed squeezing (mrule=fixed)");
  sweep_cmd->add_option("--axis", sflags.axes, "Axis as name:min:max:count")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep_cmd->add_option("--output", sflags.outputs,
                        "Output column name (repeatable, comma lists ok)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep_cmd->add_option("--out", sflags.out, "Output path ('-' = stdout)");
  sweep_cmd->add_option("--format", sflags.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--config", "Flat JSON config file");

  std::string figure_id, figure_dir = ".";
  auto* figure_cmd =
      app.add_subcommand("figure", "Write a figure-reproduction dataset");
  figure_cmd->add_option("id", figure_id, "One of the known figure ids")
      ->required();
  figure_cmd->add_option("--dir", figure_dir, "Output directory")
      ->capture_default_str();

  std::uint64_t seed = 20260824;
  int count = 100;
  auto* verify_cmd =
      app.add_subcommand("verify", "Randomized cross-path verification");
  verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--count", count, "Configs per coupling kind")
      ->capture_default_str();

  ConfigFlags rflags;
  std::string which = "onephoton", rmode = "a";
  double step = 1e-4;
  bool richardson = false, use_oracle = false;
  auto* relations_cmd =
      app.add_subcommand("relations", "Steady derivative identity check");
  add_config_flags(relations_cmd, rflags, false);
  relations_cmd->add_option("--which", which, "onephoton|twophoton")
      ->check(CLI::IsMember({"onephoton", "twophoton"}))
      ->capture_default_str();
  relations_cmd->add_option("--mode", rmode, "a|b")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  relations_cmd->add_option("--step", step, "Central difference step")
      ->capture_default_str();
  relations_cmd->add_flag("--richardson", richardson, "Richardson extrapolate");
  relations_cmd->add_flag("--oracle", use_oracle,
                          "Re-solve every point through the oracle");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config_file(std::move(args));
    std::vector<const char*> cargs = {argv[0]};
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()),
              const_cast<char**>(cargs.data()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const gaussduet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (moments_cmd->parsed()) return cmd_moments(mflags);
    if (sweep_cmd->parsed()) return cmd_sweep(sflags, sweep_cmd);
    if (figure_cmd->parsed()) return cmd_figure(figure_id, figure_dir);
    if (verify_cmd->parsed()) return cmd_verify(seed, count);
    if (relations_cmd->parsed())
      return cmd_relations(rflags, which, rmode, step, richardson, use_oracle);
  } catch (const gaussduet::StabilityError& e) {
    std::cerr << "stability error: " << e.what() << "\n";
    return kExitStability;
  } catch (const gaussduet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
