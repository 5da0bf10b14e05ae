#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "memnav/geometry.hpp"

namespace memnav {

// Dense row-major 2D grid indexed by (x, y); y selects the row.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(int nx, int ny, T fill = T{}) : nx_(nx), ny_(ny), data_(static_cast<size_t>(nx) * ny, fill) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  size_t size() const { return data_.size(); }

  bool in_bounds(int x, int y) const { return x >= 0 && x < nx_ && y >= 0 && y < ny_; }
  bool in_bounds(const Cell& c) const { return in_bounds(c.x, c.y); }

  T& at(int x, int y) {
    assert(in_bounds(x, y));
    return data_[static_cast<size_t>(y) * nx_ + x];
  }
  const T& at(int x, int y) const {
    assert(in_bounds(x, y));
    return data_[static_cast<size_t>(y) * nx_ + x];
  }
  T& at(const Cell& c) { return at(c.x, c.y); }
  const T& at(const Cell& c) const { return at(c.x, c.y); }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::vector<T> data_;
};

enum class CellState : uint8_t { Unknown = 0, Free = 1, Obstacle = 2 };

}  // namespace memnav
