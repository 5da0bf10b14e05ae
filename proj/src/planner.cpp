#include "memnav/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace memnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fixed expansion order keeps searches deterministic.
constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

double octile(const Cell& a, const Cell& b) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  return std::max(dx, dy) + (kSqrt2 - 1.0) * std::min(dx, dy);
}

struct QueueEntry {
  double f;
  uint64_t seq;
  int idx;
};

struct QueueCmp {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    return a.seq > b.seq;
  }
};

}  // namespace

OccView scene_occupancy(const Scene& scene) {
  return OccView{scene.nx, scene.ny, [&scene](int x, int y) { return scene.column_free(x, y); }};
}

std::optional<Path> astar(const OccView& grid, const Cell& start, const Cell& goal,
                          double resolution) {
  if (!grid.in_bounds(start.x, start.y) || !grid.in_bounds(goal.x, goal.y))
    throw OffMap("astar endpoint outside the grid");
  if (!grid.free(start.x, start.y) || !grid.free(goal.x, goal.y))
    throw ContractViolation("astar endpoints must be free cells");

  const int nx = grid.nx, ny = grid.ny;
  auto index = [nx](const Cell& c) { return c.y * nx + c.x; };

  std::vector<double> g(static_cast<size_t>(nx) * ny, kInf);
  std::vector<int> parent(static_cast<size_t>(nx) * ny, -1);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCmp> open;

  uint64_t seq = 0;
  g[index(start)] = 0.0;
  open.push({octile(start, goal), seq++, index(start)});

  while (!open.empty()) {
    QueueEntry top = open.top();
    open.pop();
    int cx = top.idx % nx, cy = top.idx / nx;
    double gc = g[top.idx];
    if (top.f > gc + octile({cx, cy}, goal) + 1e-12) continue;  // stale entry
    if (cx == goal.x && cy == goal.y) break;
    for (int k = 0; k < 8; ++k) {
      int mx = cx + kDx[k], my = cy + kDy[k];
      if (!grid.in_bounds(mx, my) || !grid.free(mx, my)) continue;
      double step = (k < 4) ? 1.0 : kSqrt2;
      double cand = gc + step;
      int mi = my * nx + mx;
      if (cand < g[mi] - 1e-12) {
        g[mi] = cand;
        parent[mi] = top.idx;
        open.push({cand + octile({mx, my}, goal), seq++, mi});
      }
    }
  }

  if (g[index(goal)] == kInf) return std::nullopt;

  Path path;
  path.resolution = resolution;
  for (int i = index(goal); i != -1; i = parent[i]) path.cells.push_back({i % nx, i / nx});
  std::reverse(path.cells.begin(), path.cells.end());
  for (size_t i = 0; i < path.cells.size(); ++i) {
    path.waypoints.push_back(cell_center(path.cells[i], resolution));
    if (i > 0) {
      bool diag = path.cells[i].x != path.cells[i - 1].x && path.cells[i].y != path.cells[i - 1].y;
      (diag ? path.diagonal_steps : path.straight_steps)++;
    }
  }
  return path;
}

Grid2D<double> dijkstra_field_multi(const OccView& grid, const std::vector<Cell>& sources,
                                    double resolution) {
  const int nx = grid.nx, ny = grid.ny;
  Grid2D<double> dist(nx, ny, kInf);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueCmp> open;
  uint64_t seq = 0;
  for (const Cell& s : sources) {
    if (!grid.in_bounds(s.x, s.y)) throw OffMap("dijkstra source outside the grid");
    if (!grid.free(s.x, s.y)) continue;
    dist.at(s) = 0.0;
    open.push({0.0, seq++, s.y * nx + s.x});
  }
  while (!open.empty()) {
    QueueEntry top = open.top();
    open.pop();
    int cx = top.idx % nx, cy = top.idx / nx;
    if (top.f > dist.at(cx, cy) + 1e-12) continue;
    for (int k = 0; k < 8; ++k) {
      int mx = cx + kDx[k], my = cy + kDy[k];
      if (!grid.in_bounds(mx, my) || !grid.free(mx, my)) continue;
      double step = (k < 4) ? 1.0 : kSqrt2;
      double cand = dist.at(cx, cy) + step;
      if (cand < dist.at(mx, my) - 1e-12) {
        dist.at(mx, my) = cand;
        open.push({cand, seq++, my * nx + mx});
      }
    }
  }
  for (double& d : dist.data())
    if (d != kInf) d *= resolution;
  return dist;
}

Grid2D<double> dijkstra_field(const OccView& grid, const Cell& source, double resolution) {
  return dijkstra_field_multi(grid, {source}, resolution);
}

PathFollower::Step PathFollower::next_action(const AgentPose& pose) {
  if (path_.waypoints.empty()) return {Status::Done, Action::Stop};

  if ((pose.position - path_.waypoints.back()).norm() < kGoalTolerance)
    return {Status::Done, Action::Stop};

  // Consume every leading waypoint already reached.
  while (next_ + 1 < path_.waypoints.size() &&
         (pose.position - path_.waypoints[next_]).norm() < kGoalTolerance)
    ++next_;

  const Vec2& target = path_.waypoints[next_];
  Vec2 delta = target - pose.position;
  if (delta.norm() < 1e-9) {
    if (next_ + 1 < path_.waypoints.size()) {
      ++next_;
      return next_action(pose);
    }
    return {Status::Done, Action::Stop};
  }

  double bearing = std::atan2(delta.y(), delta.x());
  double err = angle_diff(bearing, pose.yaw);
  if (std::abs(err) > kHeadingDeadband) {
    blocked_streak_ = 0;
    return {Status::Act, err > 0 ? Action::TurnLeft : Action::TurnRight};
  }
  if (blocked_streak_ > 0) return {Status::Stuck, Action::Stop};
  return {Status::Act, Action::MoveForward};
}

void PathFollower::notify_blocked() { ++blocked_streak_; }

namespace {

Vec2 bezier_point(const std::vector<Vec2>& ctrl, double t) {
  std::vector<Vec2> pts = ctrl;  // de Casteljau
  for (size_t level = pts.size() - 1; level > 0; --level)
    for (size_t i = 0; i < level; ++i) pts[i] = (1.0 - t) * pts[i] + t * pts[i + 1];
  return pts[0];
}

}  // namespace

std::vector<Vec2> bezier_smooth(const Path& path, int samples_per_segment, const OccView& grid) {
  if (path.waypoints.size() < 2) return path.waypoints;

  // Every 4th waypoint, endpoints always kept.
  std::vector<Vec2> controls;
  for (size_t i = 0; i < path.waypoints.size(); i += 4) controls.push_back(path.waypoints[i]);
  if ((path.waypoints.size() - 1) % 4 != 0) controls.push_back(path.waypoints.back());

  std::vector<Vec2> smooth;
  smooth.push_back(controls.front());
  for (size_t s = 0; s + 1 < controls.size(); s += 3) {
    size_t last = std::min(s + 3, controls.size() - 1);
    std::vector<Vec2> window(controls.begin() + static_cast<long>(s),
                             controls.begin() + static_cast<long>(last) + 1);
    for (int i = 1; i <= samples_per_segment; ++i) {
      double t = static_cast<double>(i) / samples_per_segment;
      smooth.push_back(bezier_point(window, t));
    }
  }

  for (const Vec2& p : smooth) {
    Cell c = cell_of(p, path.resolution);
    if (!grid.in_bounds(c.x, c.y) || !grid.free(c.x, c.y)) return path.waypoints;
  }
  return smooth;
}

}  // namespace memnav
