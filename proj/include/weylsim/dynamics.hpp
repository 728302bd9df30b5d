#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "weylsim/model.hpp"
#include "weylsim/steady.hpp"

namespace weylsim {

// Time-ordered samples of an integrated evolution. States are kept as raw
// matrices so that trace/Hermiticity drift of the integrator stays visible.
struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::Matrix2cd> states;
  MomentumPoint k;
  ModelParams params;
};

// Master-equation right-hand side in matrix form,
//   d rho/dt = -i[H, rho] + (gamma/2)(2 s- rho s+ - s+ s- rho - rho s+ s-).
Eigen::Matrix2cd lindblad_rhs(const Eigen::Matrix2cd& rho, const MomentumPoint& k,
                              const ModelParams& p);

// Component form of the same equation, written directly in terms of the
// population and coherence:
//   d rho_ee = i(sin kx + i sin ky) rho_eg - i(sin kx - i sin ky) rho_eg*
//              - gamma rho_ee
//   d rho_eg = (i sin kx + sin ky)(2 rho_ee - 1)
//              - [2 i m + gamma/2] rho_eg
// Kept independent of the matrix form as a cross-check.
struct ComponentRate {
  double ee;
  std::complex<double> eg;
};
ComponentRate component_rhs(double rho_ee, std::complex<double> rho_eg,
                            const MomentumPoint& k, const ModelParams& p);

// Fixed-step classical RK4 on the full 2x2 matrix. Samples are recorded
// every sample_every steps plus the final time. Throws parameter_error on
// invalid dt/t_end and numerical_error if |Tr rho - 1| drifts past 1e-6.
Trajectory integrate(const DensityMatrix& rho0, const MomentumPoint& k,
                     const ModelParams& p, double t_end, double dt = 1e-3,
                     int sample_every = 100);

// Density matrices are flattened row-major: (rho_ee, rho_eg, rho_ge, rho_gg).
Eigen::Vector4cd vec_density(const Eigen::Matrix2cd& rho);
Eigen::Matrix2cd unvec_density(const Eigen::Vector4cd& v);

// The master equation as a 4x4 linear map on vec_density ordering.
Eigen::Matrix4cd build_liouvillian(const MomentumPoint& k, const ModelParams& p);

// Steady state from the smallest right singular vector of the Liouvillian,
// Hermitized and trace-normalized. Requires gamma > 0; throws
// numerical_error("non-unique steady state") when the null space is
// degenerate (second singular value below 1e-9).
DensityMatrix steady_state_numeric(const MomentumPoint& k, const ModelParams& p);

// (t, |rho_eg|) pairs along a trajectory.
std::vector<std::pair<double, double>> coherence_series(const Trajectory& traj);

// Least-squares fit of log y against t. rate is the negated slope;
// residual_variance is the unbiased variance of the log-residuals.
struct DecayFit {
  double rate;
  double residual_variance;
};
DecayFit fit_decay_rate(const std::vector<std::pair<double, double>>& series);

}  // namespace weylsim
