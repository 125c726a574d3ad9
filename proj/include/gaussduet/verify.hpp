#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gaussduet/model.hpp"

namespace gaussduet {
namespace verify {

/// Random valid configuration drawn from the standard verification ranges:
/// n_i in [0,2], m_i in [0, sqrt(n(n+1))], phi in [0, 2*pi), kappa in
/// [0.5, 2], g/kappa in [0, 20] (linear) or [0, 0.95] (nonlinear).
SystemConfig random_config(std::mt19937_64& rng, CouplingKind kind);

std::string describe(const SystemConfig& config);

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string worst_config;  // reproduction hint for the worst case
};

/// Runs the full randomized verification battery: analytic-vs-oracle
/// equivalence (finite time and steady), linear population conservation,
/// nonlinear variance-difference constancy, and the derivative identities.
/// `count` configs per coupling kind; deterministic for a given seed.
std::vector<SuiteResult> run_all(std::uint64_t seed, int count);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace verify
}  // namespace gaussduet
