#pragma once

#include <cmath>
#include <filesystem>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/core/raster_io.hpp"
#include "pyroemu/dataset/weather_slices.hpp"
#include "pyroemu/firesim/ros.hpp"
#include "pyroemu/worldgen/scenario.hpp"

namespace pyroemu::firesim {

inline constexpr float kUnburnedSentinel = 1e9f;  // on-disk stand-in for +inf

/// Per-pixel fire arrival time in interval units; +inf = never burned.
struct ArrivalRaster {
  GridF arrival;

  int rows() const { return arrival.rows; }
  int cols() const { return arrival.cols; }
  bool burned_at(int r, int c, double t) const { return arrival(r, c) <= t; }
};

inline void write_arrival(const std::filesystem::path& path, const ArrivalRaster& a) {
  GridF g = a.arrival;
  for (auto& v : g.data)
    if (!std::isfinite(v)) v = kUnburnedSentinel;
  write_raster(path, g, "intervals");
}

inline ArrivalRaster read_arrival(const std::filesystem::path& path) {
  ArrivalRaster a{read_raster(path)};
  for (auto& v : a.arrival.data)
    if (v >= kUnburnedSentinel) v = std::numeric_limits<float>::infinity();
  return a;
}

/// Time-dependent label-setting propagation on the 8-neighbor grid.
///
/// Edge traversal u -> v costs (pixel distance * resolution) / ros(v, dir),
/// with the weather slice chosen by the source pixel's arrival time. Arrival
/// times settle in nondecreasing order, so the slice lookup is consistent.
/// Ties break by (arrival, row, col) so runs are exactly reproducible.
inline ArrivalRaster simulate(const worldgen::Scenario& scn, const RosParams& params, int n_intervals,
                              int slices_per_interval = 4) {
  if (n_intervals < 1) throw std::invalid_argument("simulate: n_intervals must be >= 1");
  if (!scn.landclass.in_bounds(scn.ignition.row, scn.ignition.col))
    throw std::invalid_argument("simulate: ignition out of bounds");
  if (!worldgen::is_burnable(scn.landclass(scn.ignition.row, scn.ignition.col)))
    throw std::invalid_argument("simulate: ignition pixel is unburnable");
  if (static_cast<int>(scn.weather.polls.size()) < n_intervals + 1)
    throw std::invalid_argument("simulate: weather series shorter than horizon + 1 polls");
  params.validate();

  const int S = slices_per_interval;
  const auto slices = dataset::interpolate_weather(scn.weather, S);
  const int max_slice = n_intervals * S - 1;

  const int rows = scn.rows(), cols = scn.cols();
  const float inf = std::numeric_limits<float>::infinity();
  GridF best(rows, cols, inf);
  std::vector<std::uint8_t> settled(static_cast<std::size_t>(rows) * cols, 0);

  struct Node {
    float t;
    int r, c;
    bool operator>(const Node& o) const {
      if (t != o.t) return t > o.t;
      if (r != o.r) return r > o.r;
      return c > o.c;
    }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;

  best(scn.ignition.row, scn.ignition.col) = 0.0f;
  pq.push({0.0f, scn.ignition.row, scn.ignition.col});

  static constexpr int dr[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
  static constexpr int dc[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
  const double interval_seconds = scn.interval_minutes * 60.0;
  const double diag = std::sqrt(2.0);
  const double inv_diag = 1.0 / diag;

  while (!pq.empty()) {
    const Node u = pq.top();
    pq.pop();
    if (u.t > static_cast<float>(n_intervals)) break;  // all remaining arrivals exceed the horizon
    auto& done = settled[static_cast<std::size_t>(u.r) * cols + u.c];
    if (done || u.t > best(u.r, u.c)) continue;
    done = 1;

    const int slice = std::min(static_cast<int>(u.t * S), max_slice);
    const worldgen::WeatherSample& w = slices[static_cast<std::size_t>(slice)];

    for (int k = 0; k < 8; ++k) {
      const int vr = u.r + dr[k], vc = u.c + dc[k];
      if (vr < 0 || vr >= rows || vc < 0 || vc >= cols) continue;
      if (settled[static_cast<std::size_t>(vr) * cols + vc]) continue;
      const bool diagonal = (dr[k] != 0 && dc[k] != 0);
      const double scale = diagonal ? inv_diag : 1.0;
      const double speed = ros(scn, vr, vc, dc[k] * scale, dr[k] * scale, w, params);
      if (!(speed > 0.0)) continue;
      const double dist_m = (diagonal ? diag : 1.0) * scn.resolution_m;
      const float cand = u.t + static_cast<float>(dist_m / speed / interval_seconds);
      if (cand < best(vr, vc)) {
        best(vr, vc) = cand;
        pq.push({cand, vr, vc});
      }
    }
  }

  for (auto& v : best.data)
    if (v > static_cast<float>(n_intervals)) v = inf;
  return ArrivalRaster{std::move(best)};
}

}  // namespace pyroemu::firesim
