#include "weylsim/model.hpp"

#include <algorithm>

namespace weylsim {

Eigen::Matrix2cd hamiltonian(const MomentumPoint& k, const ModelParams& p) {
  const EffectiveField b = effective_field(k, p);
  Eigen::Matrix2cd h;
  h << std::complex<double>(b.z + p.u0, 0.0), std::complex<double>(b.x, -b.y),
      std::complex<double>(b.x, b.y), std::complex<double>(-b.z + p.u0, 0.0);
  return h;
}

EnergyBands energy_bands(const MomentumPoint& k, const ModelParams& p) {
  const EffectiveField b = effective_field(k, p);
  const double e = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
  return {e + p.u0, -e + p.u0};
}

double band_gap(const MomentumPoint& k, const ModelParams& p) {
  const EffectiveField b = effective_field(k, p);
  return 2.0 * std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
}

MassRealization realize_mass(double m) {
  if (!(m >= -2.0 && m <= 2.0))
    throw parameter_error("mass parameter must lie in [-2, 2]");
  const double lambda = std::clamp(m, -1.0, 1.0);
  return {lambda, std::acos(m - lambda)};
}

}  // namespace weylsim
