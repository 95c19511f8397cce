#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/core/rng.hpp"

namespace pyroemu::worldgen {

/// Band-limited multi-octave value noise. Each octave is a random lattice
/// interpolated with smoothstep weights; octave o halves the base period and
/// scales amplitude by persistence^o. Output is deterministic in `rng`'s seed
/// and roughly zero-mean with unit-order range before `amplitude` scaling.
struct NoiseParams {
  double base_period_px = 128.0;  // lattice spacing of octave 0
  int octaves = 4;
  double persistence = 0.5;
};

namespace detail {

inline double smoothstep01(double t) { return t * t * (3.0 - 2.0 * t); }

// One value-noise octave with lattice spacing `period`.
inline void add_value_noise_octave(GridF& out, Rng rng, double period, double amp) {
  const int lat_rows = static_cast<int>(out.rows / period) + 2;
  const int lat_cols = static_cast<int>(out.cols / period) + 2;
  std::vector<double> lattice(static_cast<std::size_t>(lat_rows) * lat_cols);
  for (auto& v : lattice) v = rng.uniform(-1.0, 1.0);

  const double inv_p = 1.0 / period;
  for (int r = 0; r < out.rows; ++r) {
    const double fr = r * inv_p;
    const int r0 = static_cast<int>(fr);
    const double wr = smoothstep01(fr - r0);
    for (int c = 0; c < out.cols; ++c) {
      const double fc = c * inv_p;
      const int c0 = static_cast<int>(fc);
      const double wc = smoothstep01(fc - c0);
      const double v00 = lattice[static_cast<std::size_t>(r0) * lat_cols + c0];
      const double v01 = lattice[static_cast<std::size_t>(r0) * lat_cols + c0 + 1];
      const double v10 = lattice[static_cast<std::size_t>(r0 + 1) * lat_cols + c0];
      const double v11 = lattice[static_cast<std::size_t>(r0 + 1) * lat_cols + c0 + 1];
      const double top = v00 + (v01 - v00) * wc;
      const double bot = v10 + (v11 - v10) * wc;
      out(r, c) += static_cast<float>(amp * (top + (bot - top) * wr));
    }
  }
}

}  // namespace detail

inline GridF multi_octave_noise(std::uint64_t seed, int rows, int cols, const NoiseParams& p) {
  if (!(std::isfinite(p.base_period_px) && std::isfinite(p.persistence)))
    throw std::invalid_argument("multi_octave_noise: non-finite params");
  if (p.base_period_px < 2.0 || p.octaves < 1)
    throw std::invalid_argument("multi_octave_noise: base period must be >= 2px, octaves >= 1");

  GridF out(rows, cols, 0.0f);
  Rng root(seed);
  double period = p.base_period_px;
  double amp = 1.0;
  double amp_sum = 0.0;
  for (int o = 0; o < p.octaves && period >= 2.0; ++o) {
    detail::add_value_noise_octave(out, root.fork(static_cast<std::uint64_t>(o)), period, amp);
    amp_sum += amp;
    period *= 0.5;
    amp *= p.persistence;
  }
  const float norm = static_cast<float>(1.0 / amp_sum);
  for (auto& v : out.data) v *= norm;
  return out;
}

}  // namespace pyroemu::worldgen
