#pragma once

#include <Eigen/Dense>

#include "gaussduet/analytic.hpp"
#include "gaussduet/model.hpp"

namespace gaussduet {
namespace oracle {

/// Drift and diffusion of the quadrature second-moment closure,
/// dM/dt = A M + M A^T + D.
struct DriftDiffusion {
  Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d D = Eigen::Matrix4d::Zero();

  bool is_hurwitz() const;
};

DriftDiffusion assemble(const SystemConfig& config);

/// Solves A M + M A^T + D = 0 by a direct linear solve over the ten
/// independent entries of the symmetric M. Throws StabilityError when A is
/// not Hurwitz.
QuadratureCovariance steady_covariance(const DriftDiffusion& dd);

/// Exact propagation M(t) = e^{At}(M0 - Minf)e^{A^T t} + Minf when A is
/// Hurwitz; fixed-step RK4 integration of the moment ODE otherwise.
QuadratureCovariance propagate(const QuadratureCovariance& m0,
                               const DriftDiffusion& dd, double t);

/// RK4 path regardless of stability; exposed for cross-checking against the
/// matrix-exponential path.
QuadratureCovariance propagate_rk4(const QuadratureCovariance& m0,
                                   const DriftDiffusion& dd, double t);

/// Moments from a covariance matrix:
///   pop    = (xx + yy - 1)/2
///   <aa>   = (xx - yy)/2 - i <XY>_sym
///   <a^b>  = [(XaXb + YaYb) - i(XaYb - YaXb)]/2
///   <ab>   = [(XaXb - YaYb) - i(XaYb + YaXb)]/2
/// This is the (config-independent) convention under which the uncoupled
/// input state reproduces <aa> = m_a e^{2i phi}.
MomentSet extract_moments(const QuadratureCovariance& m);

/// Full oracle path: input covariance -> propagate -> moments.
MomentSet moments(const SystemConfig& config, double t);
MomentSet steady_moments(const SystemConfig& config);

}  // namespace oracle
}  // namespace gaussduet
