#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/core/raster_io.hpp"
#include "pyroemu/core/rng.hpp"
#include "pyroemu/worldgen/heightmap.hpp"
#include "pyroemu/worldgen/landclass.hpp"
#include "pyroemu/worldgen/weather.hpp"

namespace pyroemu::worldgen {

/// Scalar conditions held fixed for a fire's whole duration.
struct Forcing {
  double drought_factor = 7.0;  // [0, 10]
  double curing_factor = 85.0;  // [0, 100] percent
};

/// Static world description consumed by both the simulator and the emulator.
struct Scenario {
  GridF grad_x;  // dimensionless rise/run along +x (columns)
  GridF grad_y;  // along +y (rows)
  LandClassMap landclass;
  WeatherSeries weather;
  Forcing forcing;
  Coord ignition;
  double resolution_m = 30.0;
  int interval_minutes = 30;
  std::uint64_t seed = 0;

  int rows() const { return landclass.rows; }
  int cols() const { return landclass.cols; }
};

struct WorldgenConfig {
  int min_side_px = 1024;
  int max_side_px = 1536;
  double resolution_m = 30.0;
  int interval_minutes = 30;
  int n_intervals = 22;

  HeightmapParams heightmap;
  ClassTargets class_targets = kRegionalClassTargets;
  double landclass_patch_period_px = 160.0;

  // Per-scenario regime means are drawn from these ranges ("high fire risk"
  // envelope); sds and event settings come from `regime`.
  WeatherRegime regime;
  double temp_mean_lo_C = 30.0, temp_mean_hi_C = 42.0;
  double humidity_mean_lo_pct = 8.0, humidity_mean_hi_pct = 30.0;
  double wind_mean_lo_mps = 3.0, wind_mean_hi_mps = 15.0;
  double drought_lo = 5.0, drought_hi = 10.0;
  double curing_lo = 70.0, curing_hi = 100.0;

  double ignition_border_margin = 0.10;  // fraction of each map dimension
  int ignition_max_retries = 1000;
};

/// Composes heightmap gradients, land classes, weather, forcing, and an
/// ignition point placed on burnable ground away from the borders.
inline Scenario gen_scenario(std::uint64_t seed, const WorldgenConfig& cfg) {
  if (cfg.min_side_px < 64 || cfg.max_side_px < cfg.min_side_px)
    throw std::invalid_argument("gen_scenario: bad map side range");

  Rng rng(seed);
  Rng shape_rng = rng.fork("shape");
  const int rows = cfg.min_side_px + static_cast<int>(shape_rng.uniform_int(
                       static_cast<std::uint64_t>(cfg.max_side_px - cfg.min_side_px + 1)));
  const int cols = cfg.min_side_px + static_cast<int>(shape_rng.uniform_int(
                       static_cast<std::uint64_t>(cfg.max_side_px - cfg.min_side_px + 1)));

  Scenario s;
  s.seed = seed;
  s.resolution_m = cfg.resolution_m;
  s.interval_minutes = cfg.interval_minutes;

  const Heightmap hm =
      gen_heightmap(derive_seed(seed, "heightmap"), rows, cols, cfg.heightmap, cfg.resolution_m);
  auto [gx, gy] = height_to_gradients(hm);
  s.grad_x = std::move(gx);
  s.grad_y = std::move(gy);

  s.landclass = gen_landclass(derive_seed(seed, "landclass"), rows, cols, cfg.class_targets,
                              cfg.landclass_patch_period_px);

  Rng met = rng.fork("regime");
  WeatherRegime regime = cfg.regime;
  regime.temp_mean_C = met.uniform(cfg.temp_mean_lo_C, cfg.temp_mean_hi_C);
  regime.humidity_mean_pct = met.uniform(cfg.humidity_mean_lo_pct, cfg.humidity_mean_hi_pct);
  regime.wind_speed_mean_mps = met.uniform(cfg.wind_mean_lo_mps, cfg.wind_mean_hi_mps);
  regime.wind_dir_mean_rad = met.uniform(0.0, 6.283185307179586);
  s.weather = gen_weather(derive_seed(seed, "weather"), cfg.n_intervals, regime);

  Rng frc = rng.fork("forcing");
  s.forcing.drought_factor = frc.uniform(cfg.drought_lo, cfg.drought_hi);
  s.forcing.curing_factor = frc.uniform(cfg.curing_lo, cfg.curing_hi);

  Rng ign = rng.fork("ignition");
  const int margin_r = static_cast<int>(std::lround(cfg.ignition_border_margin * rows));
  const int margin_c = static_cast<int>(std::lround(cfg.ignition_border_margin * cols));
  bool placed = false;
  for (int attempt = 0; attempt < cfg.ignition_max_retries; ++attempt) {
    const int r = margin_r + static_cast<int>(ign.uniform_int(static_cast<std::uint64_t>(rows - 2 * margin_r)));
    const int c = margin_c + static_cast<int>(ign.uniform_int(static_cast<std::uint64_t>(cols - 2 * margin_c)));
    if (is_burnable(s.landclass(r, c))) {
      s.ignition = {r, c};
      placed = true;
      break;
    }
  }
  if (!placed) throw std::runtime_error("gen_scenario: no burnable ignition site found");
  return s;
}

// --- serialization: manifest JSON + component rasters/CSV in one directory ---

inline void save_scenario(const std::filesystem::path& dir, const Scenario& s) {
  std::filesystem::create_directories(dir);
  write_raster(dir / "grad_x", s.grad_x, "m/m");
  write_raster(dir / "grad_y", s.grad_y, "m/m");
  write_raster(dir / "landclass", landclass_to_float(s.landclass), "class-label");
  write_weather_csv(dir / "weather.csv", s.weather);

  nlohmann::json manifest = {
      {"grad_x", "grad_x"},
      {"grad_y", "grad_y"},
      {"landclass", "landclass"},
      {"weather", "weather.csv"},
      {"forcing", {{"drought_factor", s.forcing.drought_factor}, {"curing_factor", s.forcing.curing_factor}}},
      {"ignition", {s.ignition.row, s.ignition.col}},
      {"resolution_m", s.resolution_m},
      {"interval_minutes", s.interval_minutes},
      {"seed", s.seed},
  };
  std::ofstream out(dir / "scenario.json");
  if (!out) throw std::runtime_error("save_scenario: cannot open manifest in " + dir.string());
  out << manifest.dump(2) << "\n";
}

inline Scenario load_scenario(const std::filesystem::path& dir) {
  std::ifstream in(dir / "scenario.json");
  if (!in) throw std::runtime_error("load_scenario: missing " + (dir / "scenario.json").string());
  nlohmann::json m = nlohmann::json::parse(in);

  Scenario s;
  s.grad_x = read_raster(dir / m.at("grad_x").get<std::string>());
  s.grad_y = read_raster(dir / m.at("grad_y").get<std::string>());
  s.landclass = landclass_from_float(read_raster(dir / m.at("landclass").get<std::string>()));
  s.weather = read_weather_csv(dir / m.at("weather").get<std::string>());
  s.forcing.drought_factor = m.at("forcing").at("drought_factor").get<double>();
  s.forcing.curing_factor = m.at("forcing").at("curing_factor").get<double>();
  s.ignition = {m.at("ignition").at(0).get<int>(), m.at("ignition").at(1).get<int>()};
  s.resolution_m = m.at("resolution_m").get<double>();
  s.interval_minutes = m.at("interval_minutes").get<int>();
  s.seed = m.at("seed").get<std::uint64_t>();
  return s;
}

inline bool scenario_equal(const Scenario& a, const Scenario& b) {
  if (!(a.grad_x == b.grad_x && a.grad_y == b.grad_y && a.landclass == b.landclass)) return false;
  if (a.weather.polls.size() != b.weather.polls.size()) return false;
  for (std::size_t i = 0; i < a.weather.polls.size(); ++i) {
    const auto &wa = a.weather.polls[i], &wb = b.weather.polls[i];
    if (wa.temp_C != wb.temp_C || wa.wind_x_mps != wb.wind_x_mps || wa.wind_y_mps != wb.wind_y_mps ||
        wa.rel_humidity_pct != wb.rel_humidity_pct)
      return false;
  }
  return a.forcing.drought_factor == b.forcing.drought_factor &&
         a.forcing.curing_factor == b.forcing.curing_factor && a.ignition == b.ignition &&
         a.resolution_m == b.resolution_m && a.interval_minutes == b.interval_minutes && a.seed == b.seed;
}

}  // namespace pyroemu::worldgen
