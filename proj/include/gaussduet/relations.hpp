#pragma once

#include <cstddef>
#include <span>

#include "gaussduet/model.hpp"

namespace gaussduet {
namespace relations {

enum class IdentityKind { OnePhoton, TwoPhoton };
enum class WhichMode { A, B };

/// Steady inter-mode correlation magnitude vs half the magnitude of the
/// central finite difference (in the scaled coupling angle) of the paired
/// single-mode steady quantity. The derivative is taken on the complex value
/// before the magnitude. Pairings:
///   linear    OnePhoton : |<a^b>| vs d/dpsi population
///   linear    TwoPhoton : |<ab>|  vs d/dpsi <aa>
///   nonlinear OnePhoton : |<a^b>| vs d/dchi <aa>
///   nonlinear TwoPhoton : |<ab>|  vs d/dchi population
struct IdentityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double step = 0.0;
};

IdentityResult check_identity(const SystemConfig& config, IdentityKind which,
                              double h = 1e-4, WhichMode mode = WhichMode::A,
                              bool richardson = false);

/// Same check with every steady quantity re-solved through the covariance
/// oracle instead of the closed forms.
IdentityResult check_identity_oracle(const SystemConfig& config,
                                     IdentityKind which, double h = 1e-4,
                                     WhichMode mode = WhichMode::A);

enum class ExtremaPair {
  OnePhotonVsPopulation,          // |<a^b>| vs pop_a
  TwoPhotonDegreeVsSingleDegree,  // eta_ab vs eta_aa
};

struct ExtremaReport {
  std::size_t argmax_index = 0;
  double argmax_angle = 0.0;
  std::size_t inflection_index = 0;
  double inflection_angle = 0.0;
  long separation = 0;  // argmax_index - inflection_index, in grid cells
};

/// Steady-state scan over a monotone grid of scaled coupling angles: argmax
/// of the inter-mode quantity and the inflection point (second-difference
/// sign change) of the paired single-mode quantity.
ExtremaReport locate_extrema(const SystemConfig& config_template,
                             ExtremaPair pair, std::span<const double> angles);

}  // namespace relations
}  // namespace gaussduet
