#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pyroemu {

/// Dense row-major 2-D raster.
template <typename T>
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int r, int c, T fill = T{}) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {
    if (r < 0 || c < 0) throw std::invalid_argument("Grid: negative shape");
  }

  T& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  bool in_bounds(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }
  bool same_shape(const Grid& o) const { return rows == o.rows && cols == o.cols; }

  void fill(T v) { data.assign(data.size(), v); }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

using GridF = Grid<float>;
using GridU8 = Grid<std::uint8_t>;

struct Coord {
  int row = 0;
  int col = 0;
  friend bool operator==(const Coord& a, const Coord& b) { return a.row == b.row && a.col == b.col; }
};

}  // namespace pyroemu
