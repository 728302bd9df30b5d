#pragma once

#include <cmath>
#include <optional>
#include <string>

namespace weylsim::cli {

// Fully resolvable description of one CLI run. Defaults regenerate the
// reference data sets: gamma = 1, lambda = 0, kz = pi/2 for the momentum
// surfaces; the evolution always starts from (|e> + |g>)/sqrt(2).
struct RunConfig {
  std::string subcommand;

  double lambda = 0.0;
  double gamma = 1.0;
  double kz = M_PI_2;
  double kx = 0.0;
  double ky = 0.0;
  std::optional<double> m;       // overrides (lambda, kz) when set

  int grid_n = 100;
  double dt = 1e-3;
  std::optional<double> t_end;   // defaults to 50/gamma
  int steps = 401;
  int sample_every = 100;
  double touch_tol = 1e-9;       // band-touching detection threshold

  std::string out;               // defaults to "<subcommand>.<format>"
  std::string format = "csv";    // csv | json
  bool sidecar = true;
};

// RunConfig with every default and the --m override folded in; what the
// sidecar records.
struct ResolvedConfig {
  RunConfig cfg;
  double lambda;
  double kz;
  double t_end;
  std::string out;
};

ResolvedConfig resolve(const RunConfig& cfg);

// "pi", "pi/2", "-pi/4", ... parsed exactly; anything else read as a
// decimal radian value. Throws parameter_error on malformed input.
double parse_angle(const std::string& text);

// Subcommand bodies; each writes the data file plus (by default) a
// "<out>.config.json" sidecar holding the resolved configuration.
void run_bands(const RunConfig& cfg);
void run_purity_surface(const RunConfig& cfg);
void run_sweep(const RunConfig& cfg);
void run_evolve(const RunConfig& cfg);
void run_weyl_find(const RunConfig& cfg);

// Dispatch on cfg.subcommand. Returns 0; errors surface as exceptions
// (parameter_error, numerical_error, io_error).
int run(const RunConfig& cfg);

}  // namespace weylsim::cli
