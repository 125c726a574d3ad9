#include "gaussduet/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace gaussduet {
namespace oracle {

namespace {

// Index of (i,j), i <= j, in the packed upper triangle of a 4x4 symmetric
// matrix.
int packed_index(int i, int j) {
  static constexpr int idx[4][4] = {{0, 1, 2, 3},
                                    {1, 4, 5, 6},
                                    {2, 5, 7, 8},
                                    {3, 6, 8, 9}};
  return idx[i][j];
}

Eigen::Matrix4d rhs(const DriftDiffusion& dd, const Eigen::Matrix4d& m) {
  return dd.A * m + m * dd.A.transpose() + dd.D;
}

}  // namespace

bool DriftDiffusion::is_hurwitz() const {
  Eigen::EigenSolver<Eigen::Matrix4d> es(A, false);
  return es.eigenvalues().real().maxCoeff() < 0.0;
}

DriftDiffusion assemble(const SystemConfig& raw) {
  const SystemConfig config = clamped(raw);
  const double g = config.coupling.g;
  const double kappa = config.coupling.kappa;
  DriftDiffusion dd;
  dd.A = -kappa * Eigen::Matrix4d::Identity();
  if (config.coupling.kind == CouplingKind::Linear) {
    dd.A(0, 2) = g;
    dd.A(2, 0) = -g;
    dd.A(1, 3) = g;
    dd.A(3, 1) = -g;
  } else {
    dd.A(0, 2) = g;
    dd.A(2, 0) = g;
    dd.A(1, 3) = -g;
    dd.A(3, 1) = -g;
  }
  dd.D = 2.0 * kappa * input_covariance(config).m;
  return dd;
}

QuadratureCovariance steady_covariance(const DriftDiffusion& dd) {
  if (!dd.is_hurwitz())
    throw StabilityError("drift matrix is not Hurwitz; no steady covariance");
  // Pack A M + M A^T = -D over the 10 unknowns m_{ij}, i <= j.
  Eigen::Matrix<double, 10, 10> sys = Eigen::Matrix<double, 10, 10>::Zero();
  Eigen::Matrix<double, 10, 1> b;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const int row = packed_index(i, j);
      b(row) = -dd.D(i, j);
      for (int k = 0; k < 4; ++k) {
        sys(row, packed_index(std::min(k, j), std::max(k, j))) += dd.A(i, k);
        sys(row, packed_index(std::min(i, k), std::max(i, k))) += dd.A(j, k);
      }
    }
  }
  const Eigen::Matrix<double, 10, 1> x = sys.fullPivLu().solve(b);
  QuadratureCovariance cov;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      cov.m(i, j) = cov.m(j, i) = x(packed_index(i, j));
  // Relative residual: the absolute residual scales with ||A|| ||M|| for
  // strongly coupled (large g/kappa) systems.
  const double res = rhs({dd.A, dd.D}, cov.m).norm();
  const double scale =
      std::max(1.0, dd.A.norm() * cov.m.norm() + dd.D.norm());
  if (res > 1e-10 * scale) throw Error("Lyapunov solve residual too large");
  return cov;
}

QuadratureCovariance propagate(const QuadratureCovariance& m0,
                               const DriftDiffusion& dd, double t) {
  if (t < 0.0 || std::isnan(t)) throw ConfigError("t must be non-negative");
  if (t == 0.0) return m0;
  if (!dd.is_hurwitz()) return propagate_rk4(m0, dd, t);
  const QuadratureCovariance minf = steady_covariance(dd);
  const Eigen::Matrix4d e = (dd.A * t).exp();
  QuadratureCovariance out;
  out.m = e * (m0.m - minf.m) * e.transpose() + minf.m;
  out.m = 0.5 * (out.m + out.m.transpose().eval());
  return out;
}

QuadratureCovariance propagate_rk4(const QuadratureCovariance& m0,
                                   const DriftDiffusion& dd, double t) {
  if (t < 0.0 || std::isnan(t)) throw ConfigError("t must be non-negative");
  if (t == 0.0) return m0;
  const double rate = dd.A.cwiseAbs().rowwise().sum().maxCoeff();
  const double hmax = std::min(1.0 / (80.0 * std::max(rate, 1e-300)), t / 100.0);
  const int steps = std::max(100, static_cast<int>(std::ceil(t / hmax)));
  const double h = t / steps;
  Eigen::Matrix4d m = m0.m;
  for (int s = 0; s < steps; ++s) {
    const Eigen::Matrix4d k1 = rhs(dd, m);
    const Eigen::Matrix4d k2 = rhs(dd, m + 0.5 * h * k1);
    const Eigen::Matrix4d k3 = rhs(dd, m + 0.5 * h * k2);
    const Eigen::Matrix4d k4 = rhs(dd, m + h * k3);
    m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  QuadratureCovariance out;
  out.m = 0.5 * (m + m.transpose().eval());
  return out;
}

MomentSet extract_moments(const QuadratureCovariance& cov) {
  const Eigen::Matrix4d& m = cov.m;
  MomentSet ms;
  ms.pop_a = 0.5 * (m(0, 0) + m(1, 1) - 1.0);
  ms.pop_b = 0.5 * (m(2, 2) + m(3, 3) - 1.0);
  if (ms.pop_a < -1e-8 || ms.pop_b < -1e-8)
    throw NegativePopulationError("extracted population below -1e-8");
  ms.c_aa = {0.5 * (m(0, 0) - m(1, 1)), -m(0, 1)};
  ms.c_bb = {0.5 * (m(2, 2) - m(3, 3)), -m(2, 3)};
  ms.c_adagb = {0.5 * (m(0, 2) + m(1, 3)), -0.5 * (m(0, 3) - m(1, 2))};
  ms.c_ab = {0.5 * (m(0, 2) - m(1, 3)), -0.5 * (m(0, 3) + m(1, 2))};
  return ms;
}

MomentSet moments(const SystemConfig& config, double t) {
  const DriftDiffusion dd = assemble(config);
  return extract_moments(propagate(input_covariance(config), dd, t));
}

MomentSet steady_moments(const SystemConfig& config) {
  return extract_moments(steady_covariance(assemble(config)));
}

}  // namespace oracle
}  // namespace gaussduet
