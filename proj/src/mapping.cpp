#include "memnav/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace memnav {

namespace {

constexpr double kBandEpsilon = 1e-4;  // excludes exact floor-top hits

// 2D traversal marking cells crossed by the segment [a, b] (both in map-local
// meters). Visits the starting cell as well.
template <typename Fn>
void walk_cells(const Vec2& a, const Vec2& b, double res, Fn&& fn) {
  int x = static_cast<int>(std::floor(a.x() / res));
  int y = static_cast<int>(std::floor(a.y() / res));
  const int xe = static_cast<int>(std::floor(b.x() / res));
  const int ye = static_cast<int>(std::floor(b.y() / res));
  Vec2 d = b - a;
  double len = d.norm();
  fn(x, y);
  if (len < 1e-12) return;
  Vec2 dir = d / len;
  int step_x = dir.x() > 0 ? 1 : -1;
  int step_y = dir.y() > 0 ? 1 : -1;
  double t_max_x = std::abs(dir.x()) < 1e-15
                       ? std::numeric_limits<double>::infinity()
                       : ((dir.x() > 0 ? (x + 1) * res - a.x() : a.x() - x * res) / std::abs(dir.x()));
  double t_max_y = std::abs(dir.y()) < 1e-15
                       ? std::numeric_limits<double>::infinity()
                       : ((dir.y() > 0 ? (y + 1) * res - a.y() : a.y() - y * res) / std::abs(dir.y()));
  double t_dx = std::abs(dir.x()) < 1e-15 ? std::numeric_limits<double>::infinity() : res / std::abs(dir.x());
  double t_dy = std::abs(dir.y()) < 1e-15 ? std::numeric_limits<double>::infinity() : res / std::abs(dir.y());
  double t = 0.0;
  while (t <= len && (x != xe || y != ye)) {
    if (t_max_x < t_max_y) {
      t = t_max_x;
      t_max_x += t_dx;
      x += step_x;
    } else {
      t = t_max_y;
      t_max_y += t_dy;
      y += step_y;
    }
    if (t > len + 1e-9) break;
    fn(x, y);
  }
}

}  // namespace

GlobalMap GlobalMap::for_scene(const Scene& scene) {
  GlobalMap map;
  map.resolution = scene.resolution;
  map.origin = Vec2{0.0, 0.0};
  map.cells = Grid2D<CellState>(scene.nx, scene.ny, CellState::Unknown);
  map.band_low = scene.floor_top() + kBandEpsilon;
  map.band_high = scene.agent_height;
  return map;
}

void integrate_observation(GlobalMap& map, const Observation& obs) {
  const CameraModel& cam = obs.camera;
  Extrinsics ext = obs.view_extrinsics();
  const Vec2 cam_xy{ext.center.x() - map.origin.x(), ext.center.y() - map.origin.y()};
  const double cam_z = ext.center.z();
  const double res = map.resolution;

  std::vector<Cell> obstacles;

  for (int py = 0; py < cam.height; ++py) {
    for (int px = 0; px < cam.width; ++px) {
      double depth = obs.depth.at(px, py);
      bool is_hit = depth < cam.max_range - 1e-9;
      Vec3 end_world = back_project(cam, ext, px, py, depth);
      Vec3 ray = end_world - ext.center;

      // Clip the free-space segment to the height band the agent occupies.
      double t_end = 1.0;
      double dz = ray.z();
      if (std::abs(dz) > 1e-12) {
        double t_low = (map.band_low - cam_z) / dz;
        double t_high = (map.band_high - cam_z) / dz;
        double t_band = std::max(t_low, t_high);  // leaving the band going up or down
        if (t_band >= 0.0) t_end = std::min(t_end, t_band);
      }
      if (t_end > 0.0) {
        Vec2 end_xy = cam_xy + t_end * Vec2{ray.x(), ray.y()};
        walk_cells(cam_xy, end_xy, res, [&](int x, int y) {
          if (map.cells.in_bounds(x, y)) map.cells.at(x, y) = CellState::Free;
        });
      }

      if (is_hit) {
        double hz = end_world.z();
        if (hz >= map.band_low && hz <= map.band_high) {
          // Nudge along the ray so boundary hits land inside the hit voxel.
          Vec3 inside = end_world + ray.normalized() * 1e-6;
          Cell c = map.cell_at({inside.x(), inside.y()});
          if (map.cells.in_bounds(c)) obstacles.push_back(c);
        }
      }
    }
  }

  // Obstacles override free marks from the same observation.
  for (const Cell& c : obstacles) map.cells.at(c) = CellState::Obstacle;

  map.frontier_cells = extract_frontiers(map);
}

std::vector<Cell> extract_frontiers(const GlobalMap& map) {
  std::vector<Cell> out;
  const int nx = map.cells.nx(), ny = map.cells.ny();
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      if (map.cells.at(x, y) != CellState::Free) continue;
      bool frontier = (x > 0 && map.cells.at(x - 1, y) == CellState::Unknown) ||
                      (x + 1 < nx && map.cells.at(x + 1, y) == CellState::Unknown) ||
                      (y > 0 && map.cells.at(x, y - 1) == CellState::Unknown) ||
                      (y + 1 < ny && map.cells.at(x, y + 1) == CellState::Unknown);
      if (frontier) out.push_back({x, y});
    }
  }
  return out;  // scan order is already (y, x)
}

std::vector<FrontierCluster> cluster_frontiers(const GlobalMap& map, int min_size) {
  const auto& cells = map.frontier_cells;
  std::vector<FrontierCluster> clusters;
  if (cells.empty()) return clusters;

  Grid2D<int> label(map.cells.nx(), map.cells.ny(), -1);
  for (const Cell& c : cells) label.at(c) = 0;  // member, unassigned

  for (const Cell& seed : cells) {
    if (label.at(seed) != 0) continue;
    FrontierCluster cluster;
    std::vector<Cell> stack{seed};
    label.at(seed) = 1;
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      cluster.cells.push_back(c);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          Cell n{c.x + dx, c.y + dy};
          if (!label.in_bounds(n) || label.at(n) != 0) continue;
          label.at(n) = 1;
          stack.push_back(n);
        }
    }
    if (static_cast<int>(cluster.cells.size()) < min_size) continue;
    std::sort(cluster.cells.begin(), cluster.cells.end(),
              [](const Cell& a, const Cell& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
    Vec2 sum{0, 0};
    for (const Cell& c : cluster.cells) sum += map.center_of(c);
    cluster.centroid = sum / static_cast<double>(cluster.cells.size());
    clusters.push_back(std::move(cluster));
  }

  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const FrontierCluster& a, const FrontierCluster& b) {
                     if (a.cells.size() != b.cells.size()) return a.cells.size() > b.cells.size();
                     return std::tie(a.cells[0].y, a.cells[0].x) <
                            std::tie(b.cells[0].y, b.cells[0].x);
                   });
  return clusters;
}

Cell snap_to_floor(const GlobalMap& map, const Vec2& point) {
  double best = std::numeric_limits<double>::infinity();
  Cell best_cell{-1, -1};
  for (int y = 0; y < map.cells.ny(); ++y) {
    for (int x = 0; x < map.cells.nx(); ++x) {
      if (map.cells.at(x, y) != CellState::Free) continue;
      double d = (map.center_of({x, y}) - point).squaredNorm();
      if (d < best - 1e-12) {  // strict improvement keeps (y, x) tie order
        best = d;
        best_cell = {x, y};
      }
    }
  }
  if (best_cell.x < 0) throw NoFreeSpace("map has no free cell to snap to");
  return best_cell;
}

std::vector<Vec2> grid_samples(const GlobalMap& map, double spacing,
                               const std::vector<FrontierCluster>& clusters) {
  if (spacing <= 0.0) throw ContractViolation("grid sample spacing must be positive");
  std::vector<Vec2> out;
  int pitch = std::max(1, static_cast<int>(std::lround(spacing / map.resolution)));
  for (int y = 0; y < map.cells.ny(); y += pitch) {
    for (int x = 0; x < map.cells.nx(); x += pitch) {
      if (map.cells.at(x, y) != CellState::Free) continue;
      Vec2 p = map.center_of({x, y});
      bool near_centroid = false;
      for (const FrontierCluster& c : clusters)
        if ((c.centroid - p).norm() < spacing / 2.0) {
          near_centroid = true;
          break;
        }
      if (!near_centroid) out.push_back(p);
    }
  }
  return out;
}

std::string map_snapshot(const GlobalMap& map) {
  std::string out;
  for (int row = 0; row < map.cells.ny(); ++row) {
    int y = map.cells.ny() - 1 - row;
    for (int x = 0; x < map.cells.nx(); ++x) {
      switch (map.cells.at(x, y)) {
        case CellState::Unknown: out.push_back('?'); break;
        case CellState::Free: out.push_back('.'); break;
        case CellState::Obstacle: out.push_back('#'); break;
      }
    }
    out.push_back('\n');
  }
  return out;
}

Grid2D<CellState> parse_snapshot(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line);
  if (rows.empty()) throw ParseError("empty map snapshot");
  int ny = static_cast<int>(rows.size());
  int nx = static_cast<int>(rows[0].size());
  Grid2D<CellState> grid(nx, ny, CellState::Unknown);
  for (int row = 0; row < ny; ++row) {
    if (static_cast<int>(rows[row].size()) != nx) throw ParseError("ragged map snapshot");
    for (int x = 0; x < nx; ++x) {
      char c = rows[row][static_cast<size_t>(x)];
      CellState s = c == '.' ? CellState::Free
                  : c == '#' ? CellState::Obstacle
                             : CellState::Unknown;
      grid.at(x, ny - 1 - row) = s;
    }
  }
  return grid;
}

}  // namespace memnav
