#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "weylsim/model.hpp"
#include "weylsim/steady.hpp"

namespace weylsim {

// Scalar field sampled on a (kx, ky) grid, values stored row-major with kx
// as the row axis.
struct Grid2D {
  std::vector<double> kx;
  std::vector<double> ky;
  std::vector<double> values;

  std::size_t nx() const { return kx.size(); }
  std::size_t ny() const { return ky.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * ny() + j]; }
};

// n uniformly spaced points covering (-pi, pi], right endpoint included:
// k_i = (2(i+1)/n - 1) pi. When n is divisible by 4 the points 0, +-pi/2
// and pi are exactly representable on the axis.
std::vector<double> brillouin_axis(int n);

// E_+ over an n x n grid at fixed kz.
Grid2D band_surface(int n, const ModelParams& p, double k_z);

// Steady-state purity over an n x n grid at fixed kz; requires gamma > 0.
Grid2D purity_surface(int n, const ModelParams& p, double k_z);

// Band-touching (Weyl) points in the (kx, ky) plane at fixed kz: grid-local
// minima of E_+ refined onto the closed-form minimizers of sin^2 k (k = 0 or
// pi per axis), kept when E_+ < tol. Sorted lexicographically by (kx, ky);
// empty in the gapped phase.
std::vector<MomentumPoint> find_band_touchings(int n, const ModelParams& p,
                                               double k_z, double tol = 1e-9);

// Iterative per-axis minimizer of sin^2 k (Newton on sin 2k), retained as a
// cross-check of the closed-form snapping used by find_band_touchings.
double refine_band_touching(double k0);

// Purity and Bloch vector of the steady state along a uniform sweep of the
// mass parameter.
struct SweepResult {
  std::vector<double> m;
  std::vector<double> purity;
  std::vector<Eigen::Vector3d> bloch;
};

SweepResult transition_sweep(double kx, double ky, double gamma, double m_min,
                             double m_max, int steps);

std::vector<Eigen::Vector3d> bloch_trajectory_of_steady_states(
    double kx, double ky, double gamma, double m_min, double m_max, int steps);

}  // namespace weylsim
