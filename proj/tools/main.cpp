#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "weylsim/errors.hpp"
#include "weylsim/run.hpp"

namespace {

using weylsim::cli::RunConfig;

// Raw option values; angles stay strings until parse_angle resolves them.
struct Options {
  double lambda = 0.0;
  double gamma = 1.0;
  std::string kz = "pi/2";
  std::string kx = "0";
  std::string ky = "0";
  std::optional<double> m;
  int grid_n = 100;
  double dt = 1e-3;
  std::optional<double> t_end;
  int steps = 401;
  std::string out;
  std::string format = "csv";
  bool sidecar = true;
};

RunConfig to_config(const std::string& name, const Options& o) {
  RunConfig cfg;
  cfg.subcommand = name;
  cfg.lambda = o.lambda;
  cfg.gamma = o.gamma;
  cfg.kz = weylsim::cli::parse_angle(o.kz);
  cfg.kx = weylsim::cli::parse_angle(o.kx);
  cfg.ky = weylsim::cli::parse_angle(o.ky);
  cfg.m = o.m;
  cfg.grid_n = o.grid_n;
  cfg.dt = o.dt;
  cfg.t_end = o.t_end;
  cfg.steps = o.steps;
  cfg.out = o.out;
  cfg.format = o.format;
  cfg.sidecar = o.sidecar;
  return cfg;
}

void add_model_options(CLI::App* sub, Options& o) {
  sub->add_option("--lambda", o.lambda, "control parameter lambda")
      ->capture_default_str();
  sub->add_option("--gamma", o.gamma, "decay rate gamma")->capture_default_str();
  sub->add_option("--kz", o.kz, "k_z in radians; accepts pi, pi/2, ...")
      ->capture_default_str();
  sub->add_option("--m", o.m,
                  "mass parameter lambda + cos kz in [-2, 2]; overrides "
                  "--lambda/--kz");
}

void add_output_options(CLI::App* sub, Options& o, const std::string& name) {
  sub->add_option("--out", o.out, "output path (default " + name + ".<format>)");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_flag("--sidecar,!--no-sidecar", o.sidecar,
                "write <out>.config.json with the resolved run configuration");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Steady states, purity surfaces and decoherence dynamics of a "
      "dissipative Weyl-semimetal qubit"};
  app.require_subcommand(1);

  Options bands, purity, sweep, evolve, weyl;

  auto* sub_bands =
      app.add_subcommand("bands", "energy bands E_+- on a (k_x, k_y) grid");
  add_model_options(sub_bands, bands);
  sub_bands->add_option("--grid-n", bands.grid_n, "grid points per axis")
      ->capture_default_str();
  add_output_options(sub_bands, bands, "bands");
  sub_bands->callback([&] { weylsim::cli::run(to_config("bands", bands)); });

  auto* sub_purity = app.add_subcommand(
      "purity-surface", "steady-state purity on a (k_x, k_y) grid");
  add_model_options(sub_purity, purity);
  sub_purity->add_option("--grid-n", purity.grid_n, "grid points per axis")
      ->capture_default_str();
  add_output_options(sub_purity, purity, "purity-surface");
  sub_purity->callback(
      [&] { weylsim::cli::run(to_config("purity-surface", purity)); });

  auto* sub_sweep = app.add_subcommand(
      "sweep", "purity and Bloch vector of the steady state as the mass "
               "parameter sweeps [-2, 2]");
  sweep.kx = "pi/2";
  sweep.ky = "pi/2";
  sub_sweep->add_option("--gamma", sweep.gamma, "decay rate gamma")
      ->capture_default_str();
  sub_sweep->add_option("--kx", sweep.kx, "k_x in radians; accepts pi, pi/2, ...")
      ->capture_default_str();
  sub_sweep->add_option("--ky", sweep.ky, "k_y in radians")->capture_default_str();
  sub_sweep->add_option("--steps", sweep.steps, "sweep points")
      ->capture_default_str();
  add_output_options(sub_sweep, sweep, "sweep");
  sub_sweep->callback([&] { weylsim::cli::run(to_config("sweep", sweep)); });

  auto* sub_evolve = app.add_subcommand(
      "evolve", "integrate the master equation from (|e> + |g>)/sqrt(2)");
  add_model_options(sub_evolve, evolve);
  sub_evolve->add_option("--kx", evolve.kx, "k_x in radians")
      ->capture_default_str();
  sub_evolve->add_option("--ky", evolve.ky, "k_y in radians")
      ->capture_default_str();
  sub_evolve->add_option("--dt", evolve.dt, "integrator step")
      ->capture_default_str();
  sub_evolve->add_option("--t-end", evolve.t_end,
                         "final time (default 50/gamma)");
  add_output_options(sub_evolve, evolve, "evolve");
  sub_evolve->callback([&] { weylsim::cli::run(to_config("evolve", evolve)); });

  auto* sub_weyl = app.add_subcommand(
      "weyl-find", "locate band touchings in the (k_x, k_y) plane");
  add_model_options(sub_weyl, weyl);
  sub_weyl->add_option("--grid-n", weyl.grid_n, "grid points per axis")
      ->capture_default_str();
  add_output_options(sub_weyl, weyl, "weyl-find");
  sub_weyl->callback([&] { weylsim::cli::run(to_config("weyl-find", weyl)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const weylsim::parameter_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const weylsim::numerical_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const weylsim::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
