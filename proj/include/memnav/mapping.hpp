#pragma once

#include <string>
#include <vector>

#include "memnav/grid.hpp"
#include "memnav/scene.hpp"
#include "memnav/sensor.hpp"

namespace memnav {

inline constexpr int kDefaultMinClusterSize = 3;
inline constexpr double kDefaultGridSpacing = 2.0;  // meters

// The agent's 2D belief grid. Cells only ever leave UNKNOWN; on FREE/OBSTACLE
// conflict the latest observation wins. frontier_cells is kept equal to
// extract_frontiers(*this) after every update.
struct GlobalMap {
  double resolution = 0.25;
  Vec2 origin{0.0, 0.0};
  Grid2D<CellState> cells;
  std::vector<Cell> frontier_cells;  // sorted (y, x)

  // Height band used when classifying depth hits, captured from the scene.
  double band_low = 0.0;   // floor top + epsilon
  double band_high = 0.0;  // agent height

  static GlobalMap for_scene(const Scene& scene);

  Cell cell_at(const Vec2& global) const { return cell_of(global - origin, resolution); }
  Vec2 center_of(const Cell& c) const { return origin + cell_center(c, resolution); }
  CellState state(const Cell& c) const {
    return cells.in_bounds(c) ? cells.at(c) : CellState::Unknown;
  }
};

void integrate_observation(GlobalMap& map, const Observation& obs);

// FREE cells with at least one UNKNOWN 4-neighbor. Cells beyond the map edge
// do not count as unknown. Result sorted by (y, x).
std::vector<Cell> extract_frontiers(const GlobalMap& map);

struct FrontierCluster {
  std::vector<Cell> cells;  // 8-connected component, sorted (y, x)
  Vec2 centroid{0.0, 0.0};  // mean of member cell centers, global meters
};

// 8-connected components of the frontier set, components below min_size
// dropped, ordered by descending size (ties by first member cell).
std::vector<FrontierCluster> cluster_frontiers(const GlobalMap& map, int min_size);

// Nearest FREE cell to a global point (ties: smaller y, then smaller x).
Cell snap_to_floor(const GlobalMap& map, const Vec2& point);

// FREE cells on a lattice of pitch `spacing` meters aligned to the origin,
// excluding cells within spacing/2 of any cluster centroid.
std::vector<Vec2> grid_samples(const GlobalMap& map, double spacing,
                               const std::vector<FrontierCluster>& clusters);

// Character-grid snapshot: '?' unknown, '.' free, '#' obstacle (north up).
std::string map_snapshot(const GlobalMap& map);
Grid2D<CellState> parse_snapshot(const std::string& text);

}  // namespace memnav
