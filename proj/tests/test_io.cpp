#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "weylsim/errors.hpp"
#include "weylsim/run.hpp"
#include "weylsim/table.hpp"

using namespace weylsim;
namespace fs = std::filesystem;

namespace {

fs::path test_path(const std::string& name) {
  return fs::temp_directory_path() / ("weylsim_io_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_real round-trips doubles") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(u(rng), static_cast<int>(40 * u(rng)));
    CHECK(std::stod(format_real(v)) == v);
  }
  CHECK(format_real(0.0) == "0");
  CHECK(std::stod(format_real(M_PI)) == M_PI);
}

TEST_CASE("csv writes and reads back bit-identically") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Table t{{"a", "b", "c"}, {}};
  for (int i = 0; i < 50; ++i) t.rows.push_back({u(rng), u(rng), u(rng)});
  const fs::path path = test_path("roundtrip.csv");
  write_csv(t, path);
  const Table back = read_csv(path);
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    CHECK(back.rows[i] == t.rows[i]);
}

TEST_CASE("csv writer rejects unwritable paths") {
  CHECK_THROWS_AS(write_csv(Table{{"x"}, {}}, "/nonexistent-dir/out.csv"),
                  io_error);
}

TEST_CASE("json output is byte-stable") {
  Table t{{"x", "y"}, {{1.0, M_PI}, {-0.25, 3e-17}}};
  const fs::path a = test_path("stable_a.json");
  const fs::path b = test_path("stable_b.json");
  write_json(t, a);
  write_json(t, b);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["columns"].size() == 2);
  CHECK(j["rows"][0][1].get<double>() == M_PI);
}

TEST_CASE("angle parsing") {
  using cli::parse_angle;
  CHECK(parse_angle("pi") == M_PI);
  CHECK(parse_angle("-pi") == -M_PI);
  CHECK(parse_angle("pi/2") == M_PI_2);
  CHECK(parse_angle("-pi/4") == -M_PI / 4);
  CHECK(parse_angle("1.25") == 1.25);
  CHECK(parse_angle("-0.5e1") == -5.0);
  CHECK_THROWS_AS(parse_angle("two"), parameter_error);
  CHECK_THROWS_AS(parse_angle("pi/0"), parameter_error);
  CHECK_THROWS_AS(parse_angle("pi*2"), parameter_error);
  CHECK_THROWS_AS(parse_angle("1.5x"), parameter_error);
}

TEST_CASE("bands run writes the expected table and sidecar") {
  cli::RunConfig cfg;
  cfg.subcommand = "bands";
  cfg.kz = M_PI_2;
  cfg.out = test_path("bands.csv").string();
  cli::run(cfg);

  const Table t = read_csv(cfg.out);
  REQUIRE(t.columns == std::vector<std::string>{"k_x", "k_y", "E_plus", "E_minus"});
  REQUIRE(t.rows.size() == 100 * 100);
  double emin = 1e300;
  for (const auto& row : t.rows) {
    emin = std::min(emin, row[2]);
    CHECK(row[3] == -row[2]);
  }
  CHECK(emin < 1e-12);

  const auto sidecar = nlohmann::json::parse(slurp(cfg.out + ".config.json"));
  CHECK(sidecar["subcommand"] == "bands");
  CHECK(sidecar["gamma"].get<double>() == 1.0);
  CHECK(sidecar["kz"].get<double>() == M_PI_2);
  CHECK(sidecar["m"].is_null());
  CHECK(sidecar["t_end"].get<double>() == 50.0);
  CHECK(sidecar["out"] == cfg.out);
}

TEST_CASE("bands run honors a lambda offset") {
  cli::RunConfig cfg;
  cfg.subcommand = "bands";
  cfg.lambda = 0.5;
  cfg.kz = M_PI_2;
  cfg.grid_n = 64;
  cfg.out = test_path("bands_gap.csv").string();
  cfg.sidecar = false;
  cli::run(cfg);
  const Table t = read_csv(cfg.out);
  double emin = 1e300;
  for (const auto& row : t.rows) emin = std::min(emin, row[2]);
  CHECK(emin == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(fs::exists(cfg.out + ".config.json"));
}

TEST_CASE("purity surface run covers the gamma -> 0 limit") {
  cli::RunConfig cfg;
  cfg.subcommand = "purity-surface";
  cfg.gamma = 1e-4;
  cfg.kz = M_PI_2;
  cfg.grid_n = 64;
  cfg.out = test_path("purity_weak.csv").string();
  cli::run(cfg);
  const Table t = read_csv(cfg.out);
  double pmin = 1e300, pmax = -1e300;
  for (const auto& row : t.rows) {
    pmin = std::min(pmin, row[2]);
    pmax = std::max(pmax, row[2]);
  }
  CHECK(std::abs(pmin - 0.5) <= 1e-6);
  CHECK(pmax == doctest::Approx(1.0).epsilon(1e-12));

  cfg.gamma = 0.0;
  CHECK_THROWS_AS(cli::run(cfg), parameter_error);
}

TEST_CASE("sweep run emits a consistent radius column") {
  cli::RunConfig cfg;
  cfg.subcommand = "sweep";
  cfg.kx = M_PI / 4;
  cfg.ky = M_PI / 4;
  cfg.out = test_path("sweep.csv").string();
  cli::run(cfg);
  const Table t = read_csv(cfg.out);
  REQUIRE(t.columns ==
          std::vector<std::string>{"m", "purity", "R_x", "R_y", "R_z", "R"});
  REQUIRE(t.rows.size() == 401);
  double best_m = -3, best_p = 1e300;
  for (const auto& row : t.rows) {
    const double r = std::sqrt(row[2] * row[2] + row[3] * row[3] + row[4] * row[4]);
    CHECK(std::abs(row[5] - r) <= 1e-15);
    CHECK(std::abs(row[5] - std::sqrt(2.0 * row[1] - 1.0)) <= 1e-12);
    if (row[1] < best_p) {
      best_p = row[1];
      best_m = row[0];
    }
  }
  CHECK(best_m == 0.0);
  CHECK(std::abs(best_p - (1.0 - 8.0 / 20.25)) <= 1e-6);
}

TEST_CASE("evolve run records the prepared superposition") {
  cli::RunConfig cfg;
  cfg.subcommand = "evolve";
  cfg.m = 0.0;
  cfg.t_end = 20.0;
  cfg.out = test_path("evolve.csv").string();
  cli::run(cfg);
  const Table t = read_csv(cfg.out);
  REQUIRE(t.columns ==
          std::vector<std::string>{"t", "rho_ee", "re_rho_eg", "im_rho_eg",
                                   "abs_rho_eg", "R_x", "R_y", "R_z"});
  CHECK(t.rows.front()[0] == 0.0);
  CHECK(t.rows.front()[1] == 0.5);
  CHECK(t.rows.front()[2] == 0.5);
  CHECK(t.rows.front()[3] == 0.0);
  // exponential decay of the coherence column at the band touching
  std::vector<std::pair<double, double>> series;
  for (const auto& row : t.rows) series.emplace_back(row[0], row[4]);
  double rate = 0.0;
  {
    double tm = 0, zm = 0;
    for (auto& [tt, y] : series) {
      tm += tt;
      zm += std::log(y);
    }
    tm /= series.size();
    zm /= series.size();
    double stt = 0, stz = 0;
    for (auto& [tt, y] : series) {
      stt += (tt - tm) * (tt - tm);
      stz += (tt - tm) * (std::log(y) - zm);
    }
    rate = -stz / stt;
  }
  CHECK(std::abs(rate - 0.5) <= 0.005);
}

TEST_CASE("evolve run ends farther from the center away from the transition") {
  auto final_radius = [](double m) {
    cli::RunConfig cfg;
    cfg.subcommand = "evolve";
    cfg.kx = M_PI_2;
    cfg.ky = M_PI_2;
    cfg.m = m;
    cfg.t_end = 50.0;
    cfg.sidecar = false;
    cfg.out = test_path("evolve_m" + std::to_string(m) + ".csv").string();
    cli::run(cfg);
    const Table t = read_csv(cfg.out);
    const auto& row = t.rows.back();
    return std::sqrt(row[5] * row[5] + row[6] * row[6] + row[7] * row[7]);
  };
  CHECK(final_radius(1.0) > final_radius(0.0));
  CHECK(std::abs(final_radius(0.0) - std::sqrt(33.0) / 17.0) <= 1e-5);
}

TEST_CASE("purity surface run reproduces the reference extremes") {
  cli::RunConfig cfg;
  cfg.subcommand = "purity-surface";
  cfg.out = test_path("purity_default.csv").string();
  cfg.sidecar = false;
  cli::run(cfg);
  const Table t = read_csv(cfg.out);
  double pmin = 1e300, pmax = -1e300;
  for (const auto& row : t.rows) {
    pmin = std::min(pmin, row[2]);
    pmax = std::max(pmax, row[2]);
  }
  CHECK(pmax == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(pmin - 0.557093) <= 1e-6);
}

TEST_CASE("weyl-find run lists the touchings") {
  cli::RunConfig cfg;
  cfg.subcommand = "weyl-find";
  cfg.out = test_path("weyl.csv").string();
  cli::run(cfg);
  Table t = read_csv(cfg.out);
  REQUIRE(t.columns == std::vector<std::string>{"k_x", "k_y", "gap"});
  CHECK(t.rows.size() == 4);
  for (const auto& row : t.rows) CHECK(row[2] <= 1e-9);

  cfg.lambda = 0.3;
  cli::run(cfg);
  t = read_csv(cfg.out);
  CHECK(t.rows.empty());

  cfg.lambda = -1.0;
  cfg.kz = 0.0;
  cli::run(cfg);
  t = read_csv(cfg.out);
  CHECK(t.rows.size() == 4);
}

TEST_CASE("mass override steers every subcommand") {
  cli::RunConfig cfg;
  cfg.subcommand = "weyl-find";
  cfg.lambda = 0.9;  // would be gapped, but --m wins
  cfg.kz = 0.0;
  cfg.m = 0.0;
  cfg.out = test_path("weyl_m.csv").string();
  cli::run(cfg);
  CHECK(read_csv(cfg.out).rows.size() == 4);
  const auto sidecar = nlohmann::json::parse(slurp(cfg.out + ".config.json"));
  CHECK(sidecar["m"].get<double>() == 0.0);
  CHECK(sidecar["lambda"].get<double>() == 0.0);  // resolved, not the raw 0.9
}

TEST_CASE("csv and json carry the same numbers") {
  cli::RunConfig cfg;
  cfg.subcommand = "sweep";
  cfg.steps = 21;
  cfg.out = test_path("sweep_fmt.csv").string();
  cfg.sidecar = false;
  cli::run(cfg);
  cli::RunConfig jcfg = cfg;
  jcfg.format = "json";
  jcfg.out = test_path("sweep_fmt.json").string();
  cli::run(jcfg);

  const Table t = read_csv(cfg.out);
  const auto j = nlohmann::json::parse(slurp(jcfg.out));
  REQUIRE(j["rows"].size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      CHECK(j["rows"][i][c].get<double>() == t.rows[i][c]);
}
