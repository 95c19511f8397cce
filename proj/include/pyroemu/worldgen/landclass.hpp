#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pyroemu/core/grid.hpp"
#include "pyroemu/worldgen/noise.hpp"

namespace pyroemu::worldgen {

enum class LandClass : std::uint8_t { grass = 0, shrub = 1, water_unburnable = 2, other = 3 };
inline constexpr int kNumLandClasses = 4;

inline bool is_burnable(std::uint8_t label) {
  return label != static_cast<std::uint8_t>(LandClass::water_unburnable);
}

using LandClassMap = GridU8;

/// Target fractions in class order {grass, shrub, water_unburnable, other}.
using ClassTargets = std::array<double, kNumLandClasses>;

inline constexpr ClassTargets kRegionalClassTargets{0.788, 0.105, 0.0627, 0.0443};

/// Spatially coherent label map: water = low quantile of one smooth noise
/// field, shrub/other = low/high quantile bands of a second field over the
/// remaining pixels, grass = the rest. Quantile assignment realizes the
/// target proportions up to rounding.
inline LandClassMap gen_landclass(std::uint64_t seed, int rows, int cols, const ClassTargets& targets,
                                  double patch_period_px = 160.0) {
  const double sum = std::accumulate(targets.begin(), targets.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-6) throw std::invalid_argument("gen_landclass: targets must sum to 1");
  for (double t : targets) {
    if (!(t >= 0.0 && std::isfinite(t))) throw std::invalid_argument("gen_landclass: bad target");
  }
  if (rows < 8 || cols < 8) throw std::invalid_argument("gen_landclass: shape too small for coherent patches");

  NoiseParams np{.base_period_px = patch_period_px, .octaves = 3, .persistence = 0.45};
  const GridF water_field = multi_octave_noise(detail::hash_mix(seed, 0xA11CE), rows, cols, np);
  const GridF veg_field = multi_octave_noise(detail::hash_mix(seed, 0xB0B), rows, cols, np);

  const std::size_t n = water_field.size();
  const auto count_of = [n](double frac) {
    return static_cast<std::size_t>(std::llround(frac * static_cast<double>(n)));
  };

  // Deterministic ordering: (field value, linear index).
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  const auto by_field = [](const GridF& f) {
    return [&f](std::uint32_t a, std::uint32_t b) {
      if (f.data[a] != f.data[b]) return f.data[a] < f.data[b];
      return a < b;
    };
  };

  LandClassMap lc(rows, cols, static_cast<std::uint8_t>(LandClass::grass));

  std::sort(order.begin(), order.end(), by_field(water_field));
  const std::size_t n_water = count_of(targets[2]);
  for (std::size_t i = 0; i < n_water; ++i)
    lc.data[order[i]] = static_cast<std::uint8_t>(LandClass::water_unburnable);

  std::vector<std::uint32_t> land;
  land.reserve(n - n_water);
  for (std::uint32_t i = 0; i < n; ++i)
    if (lc.data[i] != static_cast<std::uint8_t>(LandClass::water_unburnable)) land.push_back(i);
  std::sort(land.begin(), land.end(), by_field(veg_field));

  const std::size_t n_shrub = std::min(count_of(targets[1]), land.size());
  const std::size_t n_other = std::min(count_of(targets[3]), land.size() - n_shrub);
  for (std::size_t i = 0; i < n_shrub; ++i)
    lc.data[land[i]] = static_cast<std::uint8_t>(LandClass::shrub);
  for (std::size_t i = 0; i < n_other; ++i)
    lc.data[land[land.size() - 1 - i]] = static_cast<std::uint8_t>(LandClass::other);

  return lc;
}

inline std::array<double, kNumLandClasses> class_fractions(const LandClassMap& lc) {
  std::array<double, kNumLandClasses> f{};
  for (auto v : lc.data) f[v] += 1.0;
  for (auto& x : f) x /= static_cast<double>(lc.size());
  return f;
}

}  // namespace pyroemu::worldgen
