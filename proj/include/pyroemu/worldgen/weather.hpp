#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pyroemu/core/rng.hpp"

namespace pyroemu::worldgen {

/// One 30-minute weather poll.
struct WeatherSample {
  double temp_C = 0.0;
  double wind_x_mps = 0.0;
  double wind_y_mps = 0.0;
  double rel_humidity_pct = 0.0;
};

struct WeatherSeries {
  std::vector<WeatherSample> polls;  // index = interval

  std::size_t size() const { return polls.size(); }
  const WeatherSample& operator[](std::size_t i) const { return polls[i]; }
};

/// Fire-weather regime: AR(1) fluctuations around fixed means, a slow random
/// drift of wind direction, and an optional sharper direction-change event.
struct WeatherRegime {
  double temp_mean_C = 36.0;
  double temp_sd_C = 2.0;
  double humidity_mean_pct = 18.0;
  double humidity_sd_pct = 4.0;
  double wind_speed_mean_mps = 8.0;
  double wind_speed_sd_mps = 1.6;
  double wind_dir_mean_rad = 0.0;
  double wind_dir_drift_sd_rad = 0.05;
  double ar1_rho = 0.85;

  // Direction-change event (probability per series; rotation applied over a
  // few intervals starting at a random time).
  double change_prob = 0.7;
  double change_min_rad = 1.05;   // ~60 deg
  double change_max_rad = 2.09;   // ~120 deg
  int change_ramp_intervals = 4;

  double wind_speed_max_mps = 25.0;
};

/// Generates n_intervals + 1 polls (interval t interpolates between polls t
/// and t+1, so rollouts to t_end = n_intervals are covered).
inline WeatherSeries gen_weather(std::uint64_t seed, int n_intervals, const WeatherRegime& rg) {
  if (n_intervals < 1) throw std::invalid_argument("gen_weather: n_intervals must be >= 1");

  Rng rng(seed);
  const int n_polls = n_intervals + 1;
  const double rho = std::clamp(rg.ar1_rho, 0.0, 0.999);
  const double innov = std::sqrt(1.0 - rho * rho);

  // Direction-change schedule decided up front so draws stay aligned.
  const bool change = rng.uniform() < rg.change_prob;
  const int change_at = change ? static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(
                                     std::max(1, n_polls - rg.change_ramp_intervals - 1)))) + 1
                               : n_polls;
  const double change_sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double change_total = change_sign * rng.uniform(rg.change_min_rad, rg.change_max_rad);

  WeatherSeries ws;
  ws.polls.resize(static_cast<std::size_t>(n_polls));
  double x_t = 0.0, x_h = 0.0, x_s = 0.0;
  double dir = rg.wind_dir_mean_rad;
  for (int t = 0; t < n_polls; ++t) {
    if (t > 0) {
      x_t = rho * x_t + innov * rng.normal(0.0, rg.temp_sd_C);
      x_h = rho * x_h + innov * rng.normal(0.0, rg.humidity_sd_pct);
      x_s = rho * x_s + innov * rng.normal(0.0, rg.wind_speed_sd_mps);
      dir += rng.normal(0.0, rg.wind_dir_drift_sd_rad);
      if (t >= change_at && t < change_at + rg.change_ramp_intervals)
        dir += change_total / rg.change_ramp_intervals;
    } else {
      x_t = rng.normal(0.0, rg.temp_sd_C);
      x_h = rng.normal(0.0, rg.humidity_sd_pct);
      x_s = rng.normal(0.0, rg.wind_speed_sd_mps);
    }
    WeatherSample& s = ws.polls[static_cast<std::size_t>(t)];
    s.temp_C = rg.temp_mean_C + x_t;
    s.rel_humidity_pct = std::clamp(rg.humidity_mean_pct + x_h, 0.0, 100.0);
    const double speed = std::clamp(rg.wind_speed_mean_mps + x_s, 0.0, rg.wind_speed_max_mps);
    s.wind_x_mps = speed * std::cos(dir);
    s.wind_y_mps = speed * std::sin(dir);
  }
  return ws;
}

inline void write_weather_csv(const std::filesystem::path& path, const WeatherSeries& ws) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_weather_csv: cannot open " + path.string());
  out << "interval,temp_C,wind_x_mps,wind_y_mps,rel_humidity_pct\n";
  out.precision(17);
  for (std::size_t i = 0; i < ws.polls.size(); ++i) {
    const auto& s = ws.polls[i];
    out << i << ',' << s.temp_C << ',' << s.wind_x_mps << ',' << s.wind_y_mps << ','
        << s.rel_humidity_pct << '\n';
  }
}

inline WeatherSeries read_weather_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_weather_csv: missing " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "interval,temp_C,wind_x_mps,wind_y_mps,rel_humidity_pct")
    throw std::runtime_error("read_weather_csv: bad header in " + path.string());
  WeatherSeries ws;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    WeatherSample s;
    std::getline(ss, field, ',');  // interval index, implied by order
    std::getline(ss, field, ',');
    s.temp_C = std::stod(field);
    std::getline(ss, field, ',');
    s.wind_x_mps = std::stod(field);
    std::getline(ss, field, ',');
    s.wind_y_mps = std::stod(field);
    std::getline(ss, field, ',');
    s.rel_humidity_pct = std::stod(field);
    ws.polls.push_back(s);
  }
  return ws;
}

}  // namespace pyroemu::worldgen
