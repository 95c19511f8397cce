#pragma once

#include <stdexcept>
#include <vector>

#include "pyroemu/worldgen/weather.hpp"

namespace pyroemu::dataset {

/// Linear upsampling of 30-minute polls into S slices per interval
/// (left-inclusive: slice k of interval t sits at fraction k/S between polls
/// t and t+1). A series of P polls yields (P-1)*S slices.
inline std::vector<worldgen::WeatherSample> interpolate_weather(const worldgen::WeatherSeries& series,
                                                                int slices_per_interval = 4) {
  if (series.polls.size() < 2) throw std::invalid_argument("interpolate_weather: need >= 2 polls");
  if (slices_per_interval < 1) throw std::invalid_argument("interpolate_weather: S must be >= 1");

  const int S = slices_per_interval;
  std::vector<worldgen::WeatherSample> slices;
  slices.reserve((series.polls.size() - 1) * static_cast<std::size_t>(S));
  for (std::size_t t = 0; t + 1 < series.polls.size(); ++t) {
    const auto& a = series.polls[t];
    const auto& b = series.polls[t + 1];
    for (int k = 0; k < S; ++k) {
      const double w = static_cast<double>(k) / S;
      slices.push_back({
          a.temp_C + (b.temp_C - a.temp_C) * w,
          a.wind_x_mps + (b.wind_x_mps - a.wind_x_mps) * w,
          a.wind_y_mps + (b.wind_y_mps - a.wind_y_mps) * w,
          a.rel_humidity_pct + (b.rel_humidity_pct - a.rel_humidity_pct) * w,
      });
    }
  }
  return slices;
}

}  // namespace pyroemu::dataset
