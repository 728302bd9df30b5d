#include "weylsim/steady.hpp"

namespace weylsim {

namespace {

// Shared denominator D = 4 s + 8 m^2 + gamma^2 / 2.
double steady_denominator(double s, double m, double gamma) {
  const double d = 4.0 * s + 8.0 * m * m + 0.5 * gamma * gamma;
  if (d == 0.0)
    throw numerical_error("steady state undefined (zero Liouvillian)");
  return d;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Eigen::Matrix2cd& m) {
  const Eigen::Matrix2cd h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr) < 1e-9)
    throw numerical_error("cannot normalize density matrix with vanishing trace");
  return {h(0, 0).real() / tr, h(0, 1) / tr};
}

DensityMatrix steady_state_at_mass(double kx, double ky, double m, double gamma) {
  const double sx = std::sin(kx);
  const double sy = std::sin(ky);
  const double s = sx * sx + sy * sy;
  const double d = steady_denominator(s, m, gamma);
  DensityMatrix rho;
  rho.ee = 2.0 * s / d;
  rho.eg = -(std::complex<double>(4.0 * m, gamma) * std::complex<double>(sx, -sy)) / d;
  return rho;
}

SteadyState steady_state(const MomentumPoint& k, const ModelParams& p) {
  const double m = mass_parameter(k.kz(), p.lambda);
  return {steady_state_at_mass(k.kx(), k.ky(), m, p.gamma), p.gamma == 0.0};
}

double purity(const DensityMatrix& rho) {
  return 1.0 + 2.0 * (std::norm(rho.eg) - rho.ee * rho.gg());
}

double purity_closed_form_at_mass(double kx, double ky, double m, double gamma) {
  const double sx = std::sin(kx);
  const double sy = std::sin(ky);
  const double s = sx * sx + sy * sy;
  const double r = s / steady_denominator(s, m, gamma);
  return 1.0 - 8.0 * r * r;
}

double purity_closed_form(const MomentumPoint& k, const ModelParams& p) {
  return purity_closed_form_at_mass(k.kx(), k.ky(),
                                    mass_parameter(k.kz(), p.lambda), p.gamma);
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
  return {2.0 * rho.eg.real(), -2.0 * rho.eg.imag(), rho.ee - rho.gg()};
}

Eigen::Vector3d bloch_vector(const Eigen::Matrix2cd& rho) {
  const std::complex<double> i(0.0, 1.0);
  return {(rho(0, 1) + rho(1, 0)).real(),
          (i * (rho(0, 1) - rho(1, 0))).real(),
          (rho(0, 0) - rho(1, 1)).real()};
}

double bloch_radius(const DensityMatrix& rho) {
  return bloch_vector(rho).norm();
}

}  // namespace weylsim
