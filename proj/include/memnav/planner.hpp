#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "memnav/geometry.hpp"
#include "memnav/grid.hpp"
#include "memnav/scene.hpp"

namespace memnav {

// Passability view over any grid (belief map or ground-truth scene).
struct OccView {
  int nx = 0;
  int ny = 0;
  std::function<bool(int, int)> free;  // true = traversable

  bool in_bounds(int x, int y) const { return x >= 0 && x < nx && y >= 0 && y < ny; }
};

OccView scene_occupancy(const Scene& scene);

struct Path {
  std::vector<Cell> cells;       // 8-adjacent, all free at plan time
  std::vector<Vec2> waypoints;   // cell centers in global meters
  int straight_steps = 0;
  int diagonal_steps = 0;
  double resolution = 0.25;

  double cost_meters() const { return (straight_steps + diagonal_steps * kSqrt2) * resolution; }
};

// Deterministic A*: unit straight / sqrt(2) diagonal costs, octile heuristic,
// ties broken by smaller f then smaller heap-insertion index.
// nullopt when start and goal are disconnected.
std::optional<Path> astar(const OccView& grid, const Cell& start, const Cell& goal, double resolution);

// Single-source distance field in meters (+inf where unreachable).
Grid2D<double> dijkstra_field(const OccView& grid, const Cell& source, double resolution);
Grid2D<double> dijkstra_field_multi(const OccView& grid, const std::vector<Cell>& sources,
                                    double resolution);

inline constexpr double kGoalTolerance = 0.15;        // meters, STOP radius
inline constexpr double kHeadingDeadband = kPi / 12;  // 15 deg = half a turn

// Discrete shortest-path follower: turns toward the next waypoint until the
// heading error is inside the deadband, then steps forward; waypoints are
// consumed as they are reached.
class PathFollower {
 public:
  enum class Status { Act, Done, Stuck };

  struct Step {
    Status status = Status::Act;
    Action action = Action::Stop;
  };

  PathFollower() = default;
  explicit PathFollower(Path path) : path_(std::move(path)) {}

  Step next_action(const AgentPose& pose);
  void notify_blocked();  // feedback from the simulator after a blocked move

  bool has_path() const { return !path_.waypoints.empty(); }
  const Path& path() const { return path_; }
  size_t cursor() const { return next_; }

 private:
  Path path_;
  size_t next_ = 0;
  int blocked_streak_ = 0;
};

// Downsamples to every 4th waypoint (endpoints kept) and fits piecewise cubic
// Bezier segments through consecutive control windows. Falls back to the raw
// waypoints when any sampled point leaves free space.
std::vector<Vec2> bezier_smooth(const Path& path, int samples_per_segment, const OccView& grid);

}  // namespace memnav
