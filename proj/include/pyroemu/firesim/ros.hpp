#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "pyroemu/worldgen/scenario.hpp"

namespace pyroemu::firesim {

/// Empirical rate-of-spread surrogate:
///
///   speed = base(class) * max(eps, 1 + k_w * (wind . dir))
///                       * exp(k_s * (slope . dir))
///                       * f_env(T, RH, curing, drought)
///
/// with f_env a clamped product of linear responses, and speed = 0 on
/// water/unburnable ground. Defaults are calibrated so a 22-interval fire
/// crosses a few hundred 30 m pixels under the default weather regime.
struct RosParams {
  std::array<double, 3> base_ros_mps{0.14, 0.09, 0.045};  // grass, shrub, other
  double wind_gain_per_mps = 0.15;
  double slope_gain = 1.5;

  double temp_ref_C = 30.0;
  double temp_coef_per_C = 0.02;
  double humidity_ref_pct = 15.0;
  double humidity_coef_per_pct = 0.012;
  double curing_floor = 0.2;   // f_cur = floor + (1 - floor) * curing/100
  double drought_floor = 0.5;  // f_dr  = floor + (1 - floor) * drought/10
  double env_min = 0.2;
  double env_max = 3.0;
  double floor_eps = 0.05;

  void validate() const {
    for (double b : base_ros_mps)
      if (!(b >= 0.0) || !std::isfinite(b)) throw std::invalid_argument("RosParams: base rates must be >= 0");
    if (!(floor_eps > 0.0 && floor_eps <= 1.0)) throw std::invalid_argument("RosParams: eps must be in (0,1]");
  }
};

/// Weather/forcing response factor, clamped to [env_min, env_max].
inline double env_response(const RosParams& p, double temp_C, double rel_humidity_pct, double curing,
                           double drought) {
  const double f_t = std::max(0.05, 1.0 + p.temp_coef_per_C * (temp_C - p.temp_ref_C));
  const double f_h = std::max(0.05, 1.0 - p.humidity_coef_per_pct * (rel_humidity_pct - p.humidity_ref_pct));
  const double f_c = p.curing_floor + (1.0 - p.curing_floor) * (curing / 100.0);
  const double f_d = p.drought_floor + (1.0 - p.drought_floor) * (drought / 10.0);
  return std::clamp(f_t * f_h * f_c * f_d, p.env_min, p.env_max);
}

/// Directional spread speed (m/s) into pixel (r, c). `ux, uy` is the unit
/// direction of travel (x along columns, y along rows).
inline double ros(const worldgen::Scenario& scn, int r, int c, double ux, double uy,
                  const worldgen::WeatherSample& w, const RosParams& p) {
  const std::uint8_t cls = scn.landclass(r, c);
  if (!worldgen::is_burnable(cls)) return 0.0;
  const double base = p.base_ros_mps[cls > 2 ? 2 : cls];  // grass=0, shrub=1, other(3)->slot 2

  const double wind_along = w.wind_x_mps * ux + w.wind_y_mps * uy;
  const double f_wind = std::max(p.floor_eps, 1.0 + p.wind_gain_per_mps * wind_along);

  const double slope_along = scn.grad_x(r, c) * ux + scn.grad_y(r, c) * uy;
  const double f_slope = std::exp(p.slope_gain * slope_along);

  const double f_env = env_response(p, w.temp_C, w.rel_humidity_pct, scn.forcing.curing_factor,
                                    scn.forcing.drought_factor);
  return base * f_wind * f_slope * f_env;
}

inline void write_ros_params(const std::filesystem::path& path, const RosParams& p) {
  nlohmann::json j = {
      {"base_ros_mps", {{"grass", p.base_ros_mps[0]}, {"shrub", p.base_ros_mps[1]}, {"other", p.base_ros_mps[2]}}},
      {"wind_gain_per_mps", p.wind_gain_per_mps},
      {"slope_gain", p.slope_gain},
      {"temp_ref_C", p.temp_ref_C},
      {"temp_coef_per_C", p.temp_coef_per_C},
      {"humidity_ref_pct", p.humidity_ref_pct},
      {"humidity_coef_per_pct", p.humidity_coef_per_pct},
      {"curing_floor", p.curing_floor},
      {"drought_floor", p.drought_floor},
      {"env_min", p.env_min},
      {"env_max", p.env_max},
      {"floor_eps", p.floor_eps},
  };
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_ros_params: cannot open " + path.string());
  out << j.dump(2) << "\n";
}

inline RosParams read_ros_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_ros_params: missing " + path.string());
  nlohmann::json j = nlohmann::json::parse(in);
  RosParams p;
  p.base_ros_mps = {j.at("base_ros_mps").at("grass").get<double>(),
                    j.at("base_ros_mps").at("shrub").get<double>(),
                    j.at("base_ros_mps").at("other").get<double>()};
  p.wind_gain_per_mps = j.at("wind_gain_per_mps").get<double>();
  p.slope_gain = j.at("slope_gain").get<double>();
  p.temp_ref_C = j.at("temp_ref_C").get<double>();
  p.temp_coef_per_C = j.at("temp_coef_per_C").get<double>();
  p.humidity_ref_pct = j.at("humidity_ref_pct").get<double>();
  p.humidity_coef_per_pct = j.at("humidity_coef_per_pct").get<double>();
  p.curing_floor = j.at("curing_floor").get<double>();
  p.drought_floor = j.at("drought_floor").get<double>();
  p.env_min = j.at("env_min").get<double>();
  p.env_max = j.at("env_max").get<double>();
  p.floor_eps = j.at("floor_eps").get<double>();
  p.validate();
  return p;
}

}  // namespace pyroemu::firesim
