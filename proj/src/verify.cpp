#include "gaussduet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "gaussduet/analytic.hpp"
#include "gaussduet/oracle.hpp"
#include "gaussduet/relations.hpp"

namespace gaussduet {
namespace verify {

namespace {

// Residual normalized so that r <= rel_tol is equivalent to
// |a - o| <= max(abs_tol, rel_tol * |o|), with abs_tol/rel_tol = 1e-2.
double scaled_residual(std::complex<double> a, std::complex<double> o) {
  return std::abs(a - o) / std::max(std::abs(o), 1e-2);
}

double moment_residual(const MomentSet& a, const MomentSet& o) {
  double r = 0.0;
  r = std::max(r, scaled_residual(a.pop_a, o.pop_a));
  r = std::max(r, scaled_residual(a.pop_b, o.pop_b));
  r = std::max(r, scaled_residual(a.c_aa, o.c_aa));
  r = std::max(r, scaled_residual(a.c_bb, o.c_bb));
  r = std::max(r, scaled_residual(a.c_adagb, o.c_adagb));
  r = std::max(r, scaled_residual(a.c_ab, o.c_ab));
  return r;
}

struct Tracker {
  double max_residual = 0.0;
  std::string worst;

  void update(double r, const SystemConfig& config, double t) {
    if (r > max_residual) {
      max_residual = r;
      std::ostringstream os;
      os << describe(config) << " t=" << t;
      worst = os.str();
    }
  }
};

SuiteResult finish(std::string name, const Tracker& tr, double tol) {
  return {std::move(name), tr.max_residual, tol, tr.max_residual <= tol, tr.worst};
}

}  // namespace

SystemConfig random_config(std::mt19937_64& rng, CouplingKind kind) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  SystemConfig cfg;
  cfg.mode_a.n = 2.0 * uni(rng);
  cfg.mode_a.m = uni(rng) * cfg.mode_a.physicality_bound();
  cfg.mode_b.n = 2.0 * uni(rng);
  cfg.mode_b.m = uni(rng) * cfg.mode_b.physicality_bound();
  cfg.phi = 2.0 * std::numbers::pi * uni(rng);
  cfg.coupling.kind = kind;
  cfg.coupling.kappa = 0.5 + 1.5 * uni(rng);
  const double ratio = kind == CouplingKind::Linear ? 20.0 * uni(rng) : 0.95 * uni(rng);
  cfg.coupling.g = ratio * cfg.coupling.kappa;
  return cfg;
}

std::string describe(const SystemConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << (c.coupling.kind == CouplingKind::Linear ? "linear" : "nonlinear")
     << " na=" << c.mode_a.n << " ma=" << c.mode_a.m << " nb=" << c.mode_b.n
     << " mb=" << c.mode_b.m << " phi=" << c.phi << " g=" << c.coupling.g
     << " kappa=" << c.coupling.kappa;
  return os.str();
}

std::vector<SuiteResult> run_all(std::uint64_t seed, int count) {
  if (count < 1) throw ConfigError("count must be at least 1");
  std::vector<SuiteResult> results;

  for (const CouplingKind kind : {CouplingKind::Linear, CouplingKind::Nonlinear}) {
    const bool linear = kind == CouplingKind::Linear;
    const std::string tag = linear ? "linear" : "nonlinear";
    std::mt19937_64 rng(seed + (linear ? 0 : 1));

    Tracker cross;
    Tracker conserved;  // population sum (linear) / variance differences (nonlinear)
    for (int i = 0; i < count; ++i) {
      const SystemConfig cfg = random_config(rng, kind);
      const double kappa = cfg.coupling.kappa;
      const NoiseSplit split = variance_decomposition(cfg);
      const double pop_sum0 = cfg.mode_a.n + cfg.mode_b.n;
      for (const double t : {0.0, 0.1 / kappa, 1.0 / kappa, 10.0 / kappa}) {
        const MomentSet a = moments(cfg, t);
        const MomentSet o = oracle::moments(cfg, t);
        cross.update(moment_residual(a, o), cfg, t);
        if (linear) {
          conserved.update(std::abs(a.pop_a + a.pop_b - pop_sum0), cfg, t);
        } else {
          const VarianceSet vs = variances(cfg, t);
          conserved.update(std::abs(vs.xx_a - vs.xx_b - 2.0 * split.u_minus), cfg, t);
          conserved.update(std::abs(vs.yy_a - vs.yy_b - 2.0 * split.u_plus), cfg, t);
        }
      }
      const MomentSet as = steady_moments(cfg);
      const MomentSet os = oracle::steady_moments(cfg);
      cross.update(moment_residual(as, os), cfg,
                   std::numeric_limits<double>::infinity());
      if (linear)
        conserved.update(std::abs(as.pop_a + as.pop_b - pop_sum0), cfg,
                         std::numeric_limits<double>::infinity());
    }
    results.push_back(finish("cross_path_" + tag, cross, 1e-8));
    results.push_back(finish(linear ? "linear_conservation" : "nonlinear_constancy",
                             conserved, linear ? 1e-12 : 1e-10));

    Tracker identities;
    std::mt19937_64 rng2(seed + (linear ? 2 : 3));
    for (int i = 0; i < count; ++i) {
      const SystemConfig cfg = random_config(rng2, kind);
      for (const auto which :
           {relations::IdentityKind::OnePhoton, relations::IdentityKind::TwoPhoton}) {
        const auto r = relations::check_identity(cfg, which, 1e-4);
        identities.update(r.residual, cfg, 0.0);
      }
    }
    results.push_back(finish("identities_" + tag, identities, 1e-6));
  }
  return results;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.pass; });
}

}  // namespace verify
}  // namespace gaussduet
