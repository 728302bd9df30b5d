#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "weylsim/errors.hpp"

namespace weylsim {

// Basis convention: |e> = (1,0)^T, |g> = (0,1)^T, sigma_z|e> = +|e>.
inline const Eigen::Matrix2cd sigma_x =
    (Eigen::Matrix2cd() << 0.0, 1.0, 1.0, 0.0).finished();
inline const Eigen::Matrix2cd sigma_y =
    (Eigen::Matrix2cd() << 0.0, std::complex<double>(0.0, -1.0),
     std::complex<double>(0.0, 1.0), 0.0).finished();
inline const Eigen::Matrix2cd sigma_z =
    (Eigen::Matrix2cd() << 1.0, 0.0, 0.0, -1.0).finished();
inline const Eigen::Matrix2cd sigma_0 = Eigen::Matrix2cd::Identity();
// Ladder operators (sigma_x +- i sigma_y)/2.
inline const Eigen::Matrix2cd sigma_plus =
    (Eigen::Matrix2cd() << 0.0, 1.0, 0.0, 0.0).finished();
inline const Eigen::Matrix2cd sigma_minus =
    (Eigen::Matrix2cd() << 0.0, 0.0, 1.0, 0.0).finished();

// Fold an angle into the first Brillouin zone (-pi, pi].
inline double wrap_angle(double k) {
  double w = std::remainder(k, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

// Wave vector in the first Brillouin zone. Components are wrapped into
// (-pi, pi] on construction.
class MomentumPoint {
 public:
  MomentumPoint() = default;
  MomentumPoint(double kx, double ky, double kz)
      : kx_(wrap_angle(kx)), ky_(wrap_angle(ky)), kz_(wrap_angle(kz)) {}

  double kx() const { return kx_; }
  double ky() const { return ky_; }
  double kz() const { return kz_; }

 private:
  double kx_ = 0.0;
  double ky_ = 0.0;
  double kz_ = 0.0;
};

// One physical configuration of the model. |lambda| <= 1 is the
// experimentally accessible window but larger values are accepted; the
// formulas are defined for any real lambda. gamma must be nonnegative.
struct ModelParams {
  ModelParams(double lambda_, double gamma_, double u0_ = 0.0)
      : lambda(lambda_), gamma(gamma_), u0(u0_) {
    if (!(gamma >= 0.0)) throw parameter_error("gamma must be >= 0");
  }

  double lambda;
  double gamma;
  double u0;  // uniform band shift; affects only the spectrum offset
};

// The momentum-dependent field B with H = B . sigma + u0.
struct EffectiveField {
  double x;
  double y;
  double z;
};

struct EnergyBands {
  double plus;
  double minus;
};

inline EffectiveField effective_field(const MomentumPoint& k, const ModelParams& p) {
  return {std::sin(k.kx()), std::sin(k.ky()), p.lambda + std::cos(k.kz())};
}

// 2x2 Hermitian Hamiltonian, entries h_ee = B_z + u0, h_eg = B_x - i B_y,
// h_ge = conj(h_eg), h_gg = -B_z + u0.
Eigen::Matrix2cd hamiltonian(const MomentumPoint& k, const ModelParams& p);

// E_+- = +-|B| + u0. With u0 = 0 the bands are symmetric, E_+ = -E_-.
EnergyBands energy_bands(const MomentumPoint& k, const ModelParams& p);

// m = lambda + cos kz. The bands touch exactly where m = 0 and
// sin kx = sin ky = 0; its sign change marks the topological transition.
inline double mass_parameter(double kz, double lambda) {
  return lambda + std::cos(kz);
}

// E_+ - E_- = 2|B|, independent of u0.
double band_gap(const MomentumPoint& k, const ModelParams& p);

// Concrete (lambda, kz) realizing a requested mass parameter m in [-2, 2].
// lambda is clamped to [-1, 1] and kz = arccos(m - lambda), so requests
// with |m| <= 1 map to lambda = m, kz = pi/2.
struct MassRealization {
  double lambda;
  double kz;
};
MassRealization realize_mass(double m);

}  // namespace weylsim
