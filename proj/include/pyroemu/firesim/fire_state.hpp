#pragma once

#include <stdexcept>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/firesim/simulate.hpp"

namespace pyroemu::firesim {

/// Fire state at reference time t: a linear time-since-arrival ramp,
///   value = (t - arrival + 1) / (t_max + 1)   when arrival <= t,
///   value = 0                                  otherwise.
/// Values lie in [0, 1]; burned pixels gain exactly one ramp unit
/// 1/(t_max+1) per interval, so the encoding stays linear in time.
inline GridF arrival_to_state(const ArrivalRaster& a, double t, double t_max) {
  if (!(t >= 0.0 && t <= t_max)) throw std::invalid_argument("arrival_to_state: need 0 <= t <= t_max");
  GridF state(a.rows(), a.cols(), 0.0f);
  const float inv = static_cast<float>(1.0 / (t_max + 1.0));
  const float tf = static_cast<float>(t);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const float arr = a.arrival.data[i];
    if (arr <= tf) state.data[i] = (tf - arr + 1.0f) * inv;
  }
  return state;
}

/// Windowed variant used by the sample cropper; window must lie inside the map.
inline GridF arrival_to_state_window(const ArrivalRaster& a, double t, double t_max, int top, int left,
                                     int rows, int cols) {
  GridF state(rows, cols, 0.0f);
  const float inv = static_cast<float>(1.0 / (t_max + 1.0));
  const float tf = static_cast<float>(t);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const float arr = a.arrival(top + r, left + c);
      if (arr <= tf) state(r, c) = (tf - arr + 1.0f) * inv;
    }
  }
  return state;
}

/// One ramp unit: the per-interval increment of a burned pixel's state value.
inline double ramp_unit(double t_max) { return 1.0 / (t_max + 1.0); }

}  // namespace pyroemu::firesim
