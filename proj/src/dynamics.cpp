#include "weylsim/dynamics.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace weylsim {

namespace {

Eigen::Matrix2cd rhs_with(const Eigen::Matrix2cd& h, double gamma,
                          const Eigen::Matrix2cd& rho) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd out = -i * (h * rho - rho * h);
  out += 0.5 * gamma *
         (2.0 * sigma_minus * rho * sigma_plus - sigma_plus * sigma_minus * rho -
          rho * sigma_plus * sigma_minus);
  return out;
}

Eigen::Matrix2cd rk4_step(const Eigen::Matrix2cd& rho, const Eigen::Matrix2cd& h,
                          double gamma, double dt) {
  const Eigen::Matrix2cd k1 = rhs_with(h, gamma, rho);
  const Eigen::Matrix2cd k2 = rhs_with(h, gamma, rho + 0.5 * dt * k1);
  const Eigen::Matrix2cd k3 = rhs_with(h, gamma, rho + 0.5 * dt * k2);
  const Eigen::Matrix2cd k4 = rhs_with(h, gamma, rho + dt * k3);
  return rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_trace(const Eigen::Matrix2cd& rho) {
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > 1e-6)
    throw numerical_error("trace drift exceeded 1e-6 during integration; reduce dt");
}

}  // namespace

Eigen::Matrix2cd lindblad_rhs(const Eigen::Matrix2cd& rho, const MomentumPoint& k,
                              const ModelParams& p) {
  return rhs_with(hamiltonian(k, p), p.gamma, rho);
}

ComponentRate component_rhs(double rho_ee, std::complex<double> rho_eg,
                            const MomentumPoint& k, const ModelParams& p) {
  const std::complex<double> i(0.0, 1.0);
  const double sx = std::sin(k.kx());
  const double sy = std::sin(k.ky());
  const double m = mass_parameter(k.kz(), p.lambda);
  const std::complex<double> d_ee = i * std::complex<double>(sx, sy) * rho_eg -
                                    i * std::complex<double>(sx, -sy) * std::conj(rho_eg) -
                                    p.gamma * rho_ee;
  const std::complex<double> d_eg =
      std::complex<double>(sy, sx) * (2.0 * rho_ee - 1.0) -
      (2.0 * i * m + 0.5 * p.gamma) * rho_eg;
  return {d_ee.real(), d_eg};
}

Trajectory integrate(const DensityMatrix& rho0, const MomentumPoint& k,
                     const ModelParams& p, double t_end, double dt,
                     int sample_every) {
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw parameter_error("t_end must be positive and finite");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw parameter_error("dt must be positive and finite");
  if (dt > t_end) throw parameter_error("dt must not exceed t_end");
  if (sample_every < 1) throw parameter_error("sample_every must be >= 1");

  const Eigen::Matrix2cd h = hamiltonian(k, p);
  Eigen::Matrix2cd rho = rho0.matrix();

  Trajectory traj{{0.0}, {rho}, k, p};
  const auto n_full = static_cast<long long>(std::floor(t_end / dt));
  for (long long i = 1; i <= n_full; ++i) {
    rho = rk4_step(rho, h, p.gamma, dt);
    check_trace(rho);
    if (i % sample_every == 0) {
      traj.times.push_back(static_cast<double>(i) * dt);
      traj.states.push_back(rho);
    }
  }
  // Final partial step when t_end is not a whole number of steps, so the
  // last sample always sits at t_end.
  const double rem = t_end - static_cast<double>(n_full) * dt;
  if (rem > 1e-9 * dt) {
    rho = rk4_step(rho, h, p.gamma, rem);
    check_trace(rho);
    traj.times.push_back(t_end);
    traj.states.push_back(rho);
  } else if (n_full % sample_every != 0) {
    traj.times.push_back(static_cast<double>(n_full) * dt);
    traj.states.push_back(rho);
  }
  return traj;
}

Eigen::Vector4cd vec_density(const Eigen::Matrix2cd& rho) {
  return {rho(0, 0), rho(0, 1), rho(1, 0), rho(1, 1)};
}

Eigen::Matrix2cd unvec_density(const Eigen::Vector4cd& v) {
  Eigen::Matrix2cd m;
  m << v(0), v(1), v(2), v(3);
  return m;
}

Eigen::Matrix4cd build_liouvillian(const MomentumPoint& k, const ModelParams& p) {
  const std::complex<double> i(0.0, 1.0);
  const Eigen::Matrix2cd h = hamiltonian(k, p);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd n_op = sigma_plus * sigma_minus;
  // Row-major vectorization: vec(A rho B) = (A kron B^T) vec(rho).
  Eigen::Matrix4cd lv =
      -i * (Eigen::kroneckerProduct(h, id) - Eigen::kroneckerProduct(id, h.transpose()));
  lv += 0.5 * p.gamma *
        (2.0 * Eigen::kroneckerProduct(sigma_minus, sigma_plus.transpose()) -
         Eigen::kroneckerProduct(n_op, id) -
         Eigen::kroneckerProduct(id, n_op.transpose()));
  return lv;
}

DensityMatrix steady_state_numeric(const MomentumPoint& k, const ModelParams& p) {
  if (!(p.gamma > 0.0))
    throw parameter_error("steady_state_numeric requires gamma > 0");
  const Eigen::Matrix4cd lv = build_liouvillian(k, p);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(lv, Eigen::ComputeFullV);
  if (svd.singularValues()(2) < 1e-9)
    throw numerical_error("non-unique steady state");
  const Eigen::Vector4cd null_vec = svd.matrixV().col(3);
  return DensityMatrix::from_matrix(unvec_density(null_vec));
}

std::vector<std::pair<double, double>> coherence_series(const Trajectory& traj) {
  std::vector<std::pair<double, double>> series;
  series.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    series.emplace_back(traj.times[i], std::abs(traj.states[i](0, 1)));
  return series;
}

DecayFit fit_decay_rate(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 10)
    throw parameter_error("decay fit needs at least 10 points");
  const auto n = static_cast<double>(series.size());
  double t_mean = 0.0, z_mean = 0.0;
  for (const auto& [t, y] : series) {
    if (!(y > 0.0)) throw parameter_error("decay fit needs positive values");
    t_mean += t;
    z_mean += std::log(y);
  }
  t_mean /= n;
  z_mean /= n;
  double stt = 0.0, stz = 0.0;
  for (const auto& [t, y] : series) {
    stt += (t - t_mean) * (t - t_mean);
    stz += (t - t_mean) * (std::log(y) - z_mean);
  }
  const double slope = stz / stt;
  double ss_res = 0.0;
  for (const auto& [t, y] : series) {
    const double r = std::log(y) - z_mean - slope * (t - t_mean);
    ss_res += r * r;
  }
  return {-slope, ss_res / (n - 2.0)};
}

}  // namespace weylsim
