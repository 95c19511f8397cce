#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace pyroemu {

namespace detail {

// splitmix64 mixer; used both as the generator step and for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(h);
}

}  // namespace detail

/// Deterministic, platform-independent RNG (splitmix64 stream).
/// Distributions are hand-rolled so outputs are bit-identical across
/// standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(detail::splitmix64(seed)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (cached pair member).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Child stream keyed by an integer tag; independent of parent draws.
  Rng fork(std::uint64_t tag) const { return Rng(detail::hash_mix(state_, tag)); }
  Rng fork(std::string_view tag) const { return Rng(detail::hash_mix(state_, detail::hash_str(tag))); }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Deterministic seed fan-out: one global seed -> per-purpose child seeds.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index = 0) {
  return detail::hash_mix(detail::hash_mix(root, stream), index);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stream, std::uint64_t index = 0) {
  return detail::hash_mix(detail::hash_mix(root, detail::hash_str(stream)), index);
}

}  // namespace pyroemu
