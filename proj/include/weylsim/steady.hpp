#pragma once

#include <Eigen/Dense>
#include <complex>

#include "weylsim/model.hpp"

namespace weylsim {

// Qubit state stored as excited population and coherence; trace 1 and
// Hermiticity hold exactly by construction. Positivity is a property of
// physically valid inputs, not enforced here.
struct DensityMatrix {
  double ee = 0.0;                         // <e|rho|e>
  std::complex<double> eg{0.0, 0.0};       // <e|rho|g>

  double gg() const { return 1.0 - ee; }
  std::complex<double> ge() const { return std::conj(eg); }

  Eigen::Matrix2cd matrix() const {
    Eigen::Matrix2cd m;
    m << std::complex<double>(ee, 0.0), eg, ge(), std::complex<double>(gg(), 0.0);
    return m;
  }

  // Hermitize and trace-normalize an approximate density matrix.
  static DensityMatrix from_matrix(const Eigen::Matrix2cd& m);
};

struct SteadyState {
  DensityMatrix rho;
  // gamma == 0: the closed form is still a steady solution when defined,
  // but without the dissipator it is not guaranteed to be the only one.
  bool dissipationless = false;
};

// Closed-form steady state of the master equation,
//   rho_ee = 2 s / D,
//   rho_eg = -(4 m + i gamma)(sin kx - i sin ky) / D,
// with s = sin^2 kx + sin^2 ky, m = lambda + cos kz and
// D = 4 s + 8 m^2 + gamma^2 / 2. Throws numerical_error when D = 0
// (zero Liouvillian: gamma = 0 at a band touching).
SteadyState steady_state(const MomentumPoint& k, const ModelParams& p);

// Same formula with the mass parameter substituted directly; used by the
// transition sweeps.
DensityMatrix steady_state_at_mass(double kx, double ky, double m, double gamma);

// P = Tr(rho^2) = 1 + 2(|rho_eg|^2 - rho_ee rho_gg), in [1/2, 1].
double purity(const DensityMatrix& rho);

// P = 1 - 8 [s / D]^2 evaluated straight from momentum and parameters.
// Kept as an independent path from purity(steady_state(...)); the two are
// cross-checked in the tests.
double purity_closed_form(const MomentumPoint& k, const ModelParams& p);
double purity_closed_form_at_mass(double kx, double ky, double m, double gamma);

// R_i = Tr(sigma_i rho): (2 Re rho_eg, -2 Im rho_eg, rho_ee - rho_gg).
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);
// Trace form for raw (possibly slightly non-Hermitian) integrator states.
Eigen::Vector3d bloch_vector(const Eigen::Matrix2cd& rho);

// |R| = sqrt(2P - 1).
double bloch_radius(const DensityMatrix& rho);

}  // namespace weylsim
