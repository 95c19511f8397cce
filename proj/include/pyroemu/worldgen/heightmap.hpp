#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/worldgen/noise.hpp"

namespace pyroemu::worldgen {

struct Heightmap {
  GridF values;          // elevation, meters
  double resolution_m = 30.0;
};

struct HeightmapParams {
  double amplitude_m = 120.0;
  double base_elevation_m = 80.0;
  NoiseParams noise{.base_period_px = 256.0, .octaves = 5, .persistence = 0.5};
};

/// Synthetic elevation field: smoothed multi-scale noise octaves.
inline Heightmap gen_heightmap(std::uint64_t seed, int rows, int cols, const HeightmapParams& p,
                               double resolution_m = 30.0) {
  if (rows < 64 || cols < 64) throw std::invalid_argument("gen_heightmap: shape dims must be >= 64");
  if (!(std::isfinite(p.amplitude_m) && std::isfinite(p.base_elevation_m)))
    throw std::invalid_argument("gen_heightmap: non-finite params");

  Heightmap h;
  h.resolution_m = resolution_m;
  h.values = multi_octave_noise(seed, rows, cols, p.noise);
  for (auto& v : h.values.data) v = static_cast<float>(p.base_elevation_m + p.amplitude_m * v);
  return h;
}

/// Central differences in meters-per-meter (dimensionless slope), one-sided
/// at raster borders. x runs along columns, y along rows.
inline std::pair<GridF, GridF> height_to_gradients(const Heightmap& h) {
  const GridF& z = h.values;
  GridF gx(z.rows, z.cols), gy(z.rows, z.cols);
  const float inv_res = static_cast<float>(1.0 / h.resolution_m);
  const float inv_2res = 0.5f * inv_res;
  for (int r = 0; r < z.rows; ++r) {
    for (int c = 0; c < z.cols; ++c) {
      if (c == 0) {
        gx(r, c) = (z(r, 1) - z(r, 0)) * inv_res;
      } else if (c == z.cols - 1) {
        gx(r, c) = (z(r, c) - z(r, c - 1)) * inv_res;
      } else {
        gx(r, c) = (z(r, c + 1) - z(r, c - 1)) * inv_2res;
      }
      if (r == 0) {
        gy(r, c) = (z(1, c) - z(0, c)) * inv_res;
      } else if (r == z.rows - 1) {
        gy(r, c) = (z(r, c) - z(r - 1, c)) * inv_res;
      } else {
        gy(r, c) = (z(r + 1, c) - z(r - 1, c)) * inv_2res;
      }
    }
  }
  return {std::move(gx), std::move(gy)};
}

}  // namespace pyroemu::worldgen
