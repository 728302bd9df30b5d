#include "weylsim/run.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "weylsim/dynamics.hpp"
#include "weylsim/errors.hpp"
#include "weylsim/model.hpp"
#include "weylsim/scan.hpp"
#include "weylsim/steady.hpp"
#include "weylsim/table.hpp"

namespace weylsim::cli {

namespace {

void write_sidecar(const ResolvedConfig& rc) {
  if (!rc.cfg.sidecar) return;
  nlohmann::ordered_json j;
  j["subcommand"] = rc.cfg.subcommand;
  j["lambda"] = rc.lambda;
  j["gamma"] = rc.cfg.gamma;
  j["kz"] = rc.kz;
  j["kx"] = rc.cfg.kx;
  j["ky"] = rc.cfg.ky;
  if (rc.cfg.m)
    j["m"] = *rc.cfg.m;
  else
    j["m"] = nullptr;
  j["grid_n"] = rc.cfg.grid_n;
  j["dt"] = rc.cfg.dt;
  j["t_end"] = rc.t_end;
  j["steps"] = rc.cfg.steps;
  j["sample_every"] = rc.cfg.sample_every;
  j["touch_tol"] = rc.cfg.touch_tol;
  j["out"] = rc.out;
  j["format"] = rc.cfg.format;
  j["sidecar"] = rc.cfg.sidecar;

  const std::string path = rc.out + ".config.json";
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << j.dump(1) << '\n';
  if (!out) throw io_error("write failed: " + path);
}

void emit(const Table& table, const ResolvedConfig& rc) {
  if (rc.cfg.format == "csv")
    write_csv(table, rc.out);
  else
    write_json(table, rc.out);
  write_sidecar(rc);
}

ModelParams params_of(const ResolvedConfig& rc) {
  if (std::abs(rc.lambda) > 1.0)
    std::cerr << "warning: |lambda| = " << std::abs(rc.lambda)
              << " exceeds the physical bound 1\n";
  return ModelParams(rc.lambda, rc.cfg.gamma);
}

void require_positive_gamma(const RunConfig& cfg) {
  if (!(cfg.gamma > 0.0))
    throw parameter_error("gamma must be > 0 for steady-state output");
}

}  // namespace

ResolvedConfig resolve(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw parameter_error("format must be csv or json");
  ResolvedConfig rc{cfg, cfg.lambda, cfg.kz, 0.0, cfg.out};
  if (cfg.m) {
    const MassRealization mr = realize_mass(*cfg.m);
    rc.lambda = mr.lambda;
    rc.kz = mr.kz;
  }
  // Long enough for steady-state convergence; with gamma = 0 there is no
  // relaxation scale and an explicit --t-end is required.
  rc.t_end = cfg.t_end ? *cfg.t_end : (cfg.gamma > 0.0 ? 50.0 / cfg.gamma : 0.0);
  if (rc.out.empty()) rc.out = cfg.subcommand + "." + cfg.format;
  return rc;
}

double parse_angle(const std::string& text) {
  std::string s = text;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = -1.0;
    s.erase(0, 1);
  }
  if (s.rfind("pi", 0) == 0) {
    std::string rest = s.substr(2);
    if (rest.empty()) return sign * M_PI;
    if (rest[0] == '/') {
      char* end = nullptr;
      const long den = std::strtol(rest.c_str() + 1, &end, 10);
      if (end != rest.c_str() + rest.size() || den <= 0)
        throw parameter_error("invalid angle: " + text);
      return sign * M_PI / static_cast<double>(den);
    }
    throw parameter_error("invalid angle: " + text);
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw parameter_error("invalid angle: " + text);
  return v;
}

void run_bands(const RunConfig& cfg) {
  const ResolvedConfig rc = resolve(cfg);
  const Grid2D g = band_surface(cfg.grid_n, params_of(rc), rc.kz);
  Table t{{"k_x", "k_y", "E_plus", "E_minus"}, {}};
  t.rows.reserve(g.nx() * g.ny());
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.ny(); ++j)
      t.rows.push_back({g.kx[i], g.ky[j], g.at(i, j), -g.at(i, j)});
  emit(t, rc);
}

void run_purity_surface(const RunConfig& cfg) {
  require_positive_gamma(cfg);
  const ResolvedConfig rc = resolve(cfg);
  const Grid2D g = purity_surface(cfg.grid_n, params_of(rc), rc.kz);
  Table t{{"k_x", "k_y", "purity"}, {}};
  t.rows.reserve(g.nx() * g.ny());
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.ny(); ++j)
      t.rows.push_back({g.kx[i], g.ky[j], g.at(i, j)});
  emit(t, rc);
}

void run_sweep(const RunConfig& cfg) {
  require_positive_gamma(cfg);
  const ResolvedConfig rc = resolve(cfg);
  const SweepResult sweep =
      transition_sweep(cfg.kx, cfg.ky, cfg.gamma, -2.0, 2.0, cfg.steps);
  Table t{{"m", "purity", "R_x", "R_y", "R_z", "R"}, {}};
  t.rows.reserve(sweep.m.size());
  for (std::size_t i = 0; i < sweep.m.size(); ++i) {
    const Eigen::Vector3d& r = sweep.bloch[i];
    t.rows.push_back({sweep.m[i], sweep.purity[i], r.x(), r.y(), r.z(), r.norm()});
  }
  emit(t, rc);
}

void run_evolve(const RunConfig& cfg) {
  const ResolvedConfig rc = resolve(cfg);
  const MomentumPoint k(cfg.kx, cfg.ky, rc.kz);
  const DensityMatrix rho0{0.5, {0.5, 0.0}};  // (|e> + |g>)/sqrt(2)
  const Trajectory traj = integrate(rho0, k, params_of(rc), rc.t_end, cfg.dt,
                                    cfg.sample_every);
  Table t{{"t", "rho_ee", "re_rho_eg", "im_rho_eg", "abs_rho_eg", "R_x", "R_y",
           "R_z"},
          {}};
  t.rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Eigen::Matrix2cd& rho = traj.states[i];
    const Eigen::Vector3d r = bloch_vector(rho);
    t.rows.push_back({traj.times[i], rho(0, 0).real(), rho(0, 1).real(),
                      rho(0, 1).imag(), std::abs(rho(0, 1)), r.x(), r.y(),
                      r.z()});
  }
  emit(t, rc);
}

void run_weyl_find(const RunConfig& cfg) {
  const ResolvedConfig rc = resolve(cfg);
  const ModelParams p = params_of(rc);
  const auto touchings = find_band_touchings(cfg.grid_n, p, rc.kz, cfg.touch_tol);
  Table t{{"k_x", "k_y", "gap"}, {}};
  t.rows.reserve(touchings.size());
  for (const MomentumPoint& k : touchings)
    t.rows.push_back({k.kx(), k.ky(), band_gap(k, p)});
  emit(t, rc);
}

int run(const RunConfig& cfg) {
  if (cfg.subcommand == "bands")
    run_bands(cfg);
  else if (cfg.subcommand == "purity-surface")
    run_purity_surface(cfg);
  else if (cfg.subcommand == "sweep")
    run_sweep(cfg);
  else if (cfg.subcommand == "evolve")
    run_evolve(cfg);
  else if (cfg.subcommand == "weyl-find")
    run_weyl_find(cfg);
  else
    throw parameter_error("unknown subcommand: " + cfg.subcommand);
  return 0;
}

}  // namespace weylsim::cli
