#include "weylsim/scan.hpp"

#include <algorithm>
#include <cmath>

namespace weylsim {

namespace {

// Nearest multiple of pi, wrapped into the zone: the exact minimizers of
// sin^2 k are k = 0 and k = pi.
double snap_axis(double k) {
  return wrap_angle(M_PI * std::round(k / M_PI));
}

// 8-neighborhood with periodic wrap: the grid tiles the Brillouin zone.
bool is_local_min(const Grid2D& g, int i, int j) {
  const int n_i = static_cast<int>(g.nx());
  const int n_j = static_cast<int>(g.ny());
  const double v = g.at(i, j);
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      if (di == 0 && dj == 0) continue;
      const int ii = (i + di + n_i) % n_i;
      const int jj = (j + dj + n_j) % n_j;
      if (g.at(ii, jj) < v) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<double> brillouin_axis(int n) {
  if (n < 1) throw parameter_error("grid size must be >= 1");
  std::vector<double> axis(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    axis[static_cast<std::size_t>(i)] = (2.0 * (i + 1) / n - 1.0) * M_PI;
  return axis;
}

Grid2D band_surface(int n, const ModelParams& p, double k_z) {
  if (n < 3) throw parameter_error("grid size must be >= 3");
  Grid2D g{brillouin_axis(n), brillouin_axis(n), {}};
  g.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
#pragma omp parallel for
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.values[static_cast<std::size_t>(i) * n + j] =
          energy_bands(MomentumPoint(g.kx[i], g.ky[j], k_z), p).plus;
  return g;
}

Grid2D purity_surface(int n, const ModelParams& p, double k_z) {
  if (n < 3) throw parameter_error("grid size must be >= 3");
  if (!(p.gamma > 0.0))
    throw parameter_error("purity surface requires gamma > 0");
  Grid2D g{brillouin_axis(n), brillouin_axis(n), {}};
  g.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const double m = mass_parameter(k_z, p.lambda);
#pragma omp parallel for
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.values[static_cast<std::size_t>(i) * n + j] =
          purity_closed_form_at_mass(g.kx[i], g.ky[j], m, p.gamma);
  return g;
}

std::vector<MomentumPoint> find_band_touchings(int n, const ModelParams& p,
                                               double k_z, double tol) {
  if (!(tol > 0.0)) throw parameter_error("tolerance must be positive");
  const Grid2D g = band_surface(n, p, k_z);

  std::vector<std::pair<double, double>> points;
  for (int i = 0; i < static_cast<int>(g.nx()); ++i) {
    for (int j = 0; j < static_cast<int>(g.ny()); ++j) {
      if (!is_local_min(g, i, j)) continue;
      const double rx = snap_axis(g.kx[i]);
      const double ry = snap_axis(g.ky[j]);
      if (energy_bands(MomentumPoint(rx, ry, k_z), p).plus < tol)
        points.emplace_back(rx, ry);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<MomentumPoint> out;
  out.reserve(points.size());
  for (const auto& [kx, ky] : points) out.emplace_back(kx, ky, k_z);
  return out;
}

double refine_band_touching(double k0) {
  double k = k0;
  for (int it = 0; it < 50; ++it) {
    const double grad = std::sin(2.0 * k);
    if (std::abs(grad) < 1e-15) break;
    k -= 0.5 * std::tan(2.0 * k);
  }
  return wrap_angle(k);
}

SweepResult transition_sweep(double kx, double ky, double gamma, double m_min,
                             double m_max, int steps) {
  if (steps < 3) throw parameter_error("sweep needs at least 3 steps");
  if (!(gamma > 0.0)) throw parameter_error("sweep requires gamma > 0");
  if (!(m_min < m_max)) throw parameter_error("sweep range must be increasing");

  SweepResult out;
  out.m.resize(static_cast<std::size_t>(steps));
  out.purity.resize(static_cast<std::size_t>(steps));
  out.bloch.resize(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    // Endpoint-interpolated so that symmetric ranges sample exact +-m pairs.
    const double m = ((steps - 1 - i) * m_min + i * m_max) / (steps - 1);
    const auto idx = static_cast<std::size_t>(i);
    out.m[idx] = m;
    out.purity[idx] = purity_closed_form_at_mass(kx, ky, m, gamma);
    out.bloch[idx] = bloch_vector(steady_state_at_mass(kx, ky, m, gamma));
  }
  return out;
}

std::vector<Eigen::Vector3d> bloch_trajectory_of_steady_states(
    double kx, double ky, double gamma, double m_min, double m_max, int steps) {
  return transition_sweep(kx, ky, gamma, m_min, m_max, steps).bloch;
}

}  // namespace weylsim
