#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "memnav/errors.hpp"
#include "memnav/geometry.hpp"
#include "memnav/grid.hpp"

namespace memnav {

struct Observation;  // sensor.hpp

// Fixed semantic ids. Object instances get ids >= kFirstObjectId.
inline constexpr uint16_t kSemanticNone = 0;
inline constexpr uint16_t kSemanticFloor = 1;
inline constexpr uint16_t kSemanticWall = 2;
inline constexpr uint16_t kFirstObjectId = 3;

inline constexpr double kStepSize = 0.25;            // meters per MOVE_FORWARD
inline constexpr double kTurnAngle = kPi / 6.0;      // 30 degrees per turn
inline constexpr double kSuccessRadius = 0.2;        // meters to a goal viewpoint
inline constexpr double kDefaultMinPixelFraction = 0.001;
inline constexpr double kViewpointRadius = 1.0;      // generated viewpoints: max distance to object

enum class Action : uint8_t { Stop, MoveForward, TurnLeft, TurnRight };

const char* action_name(Action a);

struct Voxel {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const Voxel&, const Voxel&) = default;
};

struct AgentPose {
  Vec2 position{0.0, 0.0};
  double yaw = 0.0;  // [0, 2*pi)

  friend bool operator==(const AgentPose& a, const AgentPose& b) {
    return a.position.x() == b.position.x() && a.position.y() == b.position.y() && a.yaw == b.yaw;
  }
};

struct ObjectInstance {
  int instance_id = 0;  // equals the instance's semantic id
  std::string category;
  std::vector<Voxel> voxel_set;
  Vec3 centroid{0, 0, 0};          // meters
  std::vector<Vec2> viewpoints;    // global meters, on free floor cells

  friend bool operator==(const ObjectInstance& a, const ObjectInstance& b) {
    if (a.instance_id != b.instance_id || a.category != b.category ||
        a.voxel_set != b.voxel_set || a.viewpoints.size() != b.viewpoints.size())
      return false;
    if (a.centroid.x() != b.centroid.x() || a.centroid.y() != b.centroid.y() ||
        a.centroid.z() != b.centroid.z())
      return false;
    for (size_t i = 0; i < a.viewpoints.size(); ++i)
      if (a.viewpoints[i].x() != b.viewpoints[i].x() || a.viewpoints[i].y() != b.viewpoints[i].y())
        return false;
    return true;
  }
};

// Ground-truth voxel world. Immutable after load; safe to share read-only.
struct Scene {
  double resolution = 0.25;  // meters per voxel
  int nx = 0, ny = 0, nz = 0;
  int floor_z = 0;
  double agent_height = 1.5;
  double camera_height = 1.25;
  std::vector<uint16_t> voxels;  // semantic id per voxel, 0 = empty
  std::vector<ObjectInstance> objects;
  std::map<uint16_t, std::string> legend;  // semantic id -> category name

  bool in_bounds(int x, int y, int z) const {
    return x >= 0 && x < nx && y >= 0 && y < ny && z >= 0 && z < nz;
  }
  uint16_t at(int x, int y, int z) const {
    return voxels[(static_cast<size_t>(z) * ny + y) * nx + x];
  }
  uint16_t& at_mut(int x, int y, int z) {
    return voxels[(static_cast<size_t>(z) * ny + y) * nx + x];
  }

  double floor_top() const { return (floor_z + 1) * resolution; }
  int agent_top_z() const;  // highest voxel layer intersecting the agent's body

  // A column is navigable when every voxel in the agent's height band is empty.
  bool column_free(int ix, int iy) const;
  bool column_free(const Cell& c) const { return column_free(c.x, c.y); }
  bool free_at(const Vec2& p) const;

  std::vector<const ObjectInstance*> instances_of(const std::string& category) const;
  std::vector<uint16_t> semantic_ids_of(const std::string& category) const;
  bool has_category(const std::string& category) const;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.resolution == b.resolution && a.nx == b.nx && a.ny == b.ny && a.nz == b.nz &&
           a.floor_z == b.floor_z && a.agent_height == b.agent_height &&
           a.camera_height == b.camera_height && a.voxels == b.voxels && a.objects == b.objects &&
           a.legend == b.legend;
  }
};

struct StepResult {
  AgentPose pose;
  bool blocked = false;
};

StepResult apply_action(const Scene& scene, const AgentPose& pose, Action action);

// Shortest 8-connected free-column path length in meters (diagonal cost
// sqrt(2) * resolution); +inf when disconnected. Throws OffMap.
double geodesic_distance(const Scene& scene, const Vec2& a, const Vec2& b);

bool check_success(const Scene& scene, const AgentPose& pose, const std::string& goal_category,
                   double radius = kSuccessRadius);

bool detect_goal(const Scene& scene, const Observation& obs, const std::string& goal_category,
                 double min_pixel_fraction = kDefaultMinPixelFraction);

// Free floor cells within kViewpointRadius of an object voxel that have an
// unobstructed line of sight to it at camera height.
std::vector<Vec2> generate_viewpoints(const Scene& scene, const ObjectInstance& object);

// Nearest goal viewpoint by scene geodesic; nullopt when no viewpoint is
// reachable. Throws UnknownCategory.
struct ViewpointHit {
  Vec2 viewpoint;
  double geodesic = 0.0;
};
std::optional<ViewpointHit> nearest_goal_viewpoint(const Scene& scene, const Vec2& from,
                                                   const std::string& goal_category);

// True iff the segment from `a` (3D) to `b` (3D) crosses no occupied voxel
// other than voxels of `ignore_id` (0 ignores nothing).
bool line_of_sight(const Scene& scene, const Vec3& a, const Vec3& b, uint16_t ignore_id = 0);

Scene load_scene(const std::filesystem::path& path);
void save_scene(const Scene& scene, const std::filesystem::path& path);
Scene parse_scene(const std::string& text);
std::string serialize_scene(const Scene& scene);

void validate_scene(const Scene& scene);  // throws InvariantViolation

}  // namespace memnav
