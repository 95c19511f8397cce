#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pyroemu/core/grid.hpp"

namespace pyroemu {

static_assert(std::endian::native == std::endian::little,
              "raster format is little-endian; big-endian hosts are unsupported");

/// Framework raster format: `<name>.json` sidecar + `<name>.bin` raw f32le,
/// row-major. `path` is the base name without extension.
inline void write_raster(const std::filesystem::path& path, const GridF& g, const std::string& units) {
  nlohmann::json meta = {
      {"shape", {g.rows, g.cols}},
      {"dtype", "f32le"},
      {"order", "row-major"},
      {"units", units},
  };
  {
    std::ofstream js(path.string() + ".json");
    if (!js) throw std::runtime_error("write_raster: cannot open " + path.string() + ".json");
    js << meta.dump(2) << "\n";
  }
  std::ofstream bin(path.string() + ".bin", std::ios::binary);
  if (!bin) throw std::runtime_error("write_raster: cannot open " + path.string() + ".bin");
  bin.write(reinterpret_cast<const char*>(g.data.data()),
            static_cast<std::streamsize>(g.data.size() * sizeof(float)));
  if (!bin) throw std::runtime_error("write_raster: short write to " + path.string() + ".bin");
}

inline GridF read_raster(const std::filesystem::path& path, std::string* units_out = nullptr) {
  std::ifstream js(path.string() + ".json");
  if (!js) throw std::runtime_error("read_raster: missing " + path.string() + ".json");
  nlohmann::json meta = nlohmann::json::parse(js);
  if (meta.at("dtype").get<std::string>() != "f32le" ||
      meta.at("order").get<std::string>() != "row-major") {
    throw std::runtime_error("read_raster: unsupported encoding in " + path.string() + ".json");
  }
  const int rows = meta.at("shape").at(0).get<int>();
  const int cols = meta.at("shape").at(1).get<int>();
  if (units_out) *units_out = meta.value("units", std::string{});

  GridF g(rows, cols);
  std::ifstream bin(path.string() + ".bin", std::ios::binary);
  if (!bin) throw std::runtime_error("read_raster: missing " + path.string() + ".bin");
  bin.read(reinterpret_cast<char*>(g.data.data()),
           static_cast<std::streamsize>(g.data.size() * sizeof(float)));
  if (bin.gcount() != static_cast<std::streamsize>(g.data.size() * sizeof(float))) {
    throw std::runtime_error("read_raster: short read from " + path.string() + ".bin");
  }
  return g;
}

/// Land classes travel as float-coded integer labels.
inline GridF landclass_to_float(const GridU8& lc) {
  GridF g(lc.rows, lc.cols);
  for (std::size_t i = 0; i < lc.size(); ++i) g.data[i] = static_cast<float>(lc.data[i]);
  return g;
}

inline GridU8 landclass_from_float(const GridF& g) {
  GridU8 lc(g.rows, g.cols);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const float v = g.data[i];
    if (!(v >= 0.0f && v < 256.0f)) throw std::runtime_error("landclass raster holds non-label value");
    lc.data[i] = static_cast<std::uint8_t>(v + 0.5f);
  }
  return lc;
}

}  // namespace pyroemu
