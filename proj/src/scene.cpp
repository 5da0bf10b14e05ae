#include "memnav/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "memnav/planner.hpp"
#include "memnav/sensor.hpp"

namespace memnav {

const char* action_name(Action a) {
  switch (a) {
    case Action::Stop: return "STOP";
    case Action::MoveForward: return "MOVE_FORWARD";
    case Action::TurnLeft: return "TURN_LEFT";
    case Action::TurnRight: return "TURN_RIGHT";
  }
  return "?";
}

int Scene::agent_top_z() const {
  return floor_z + static_cast<int>(std::ceil(agent_height / resolution - 1e-9));
}

bool Scene::column_free(int ix, int iy) const {
  if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return false;
  if (at(ix, iy, floor_z) != kSemanticFloor) return false;
  int top = std::min(nz - 1, agent_top_z());
  for (int z = floor_z + 1; z <= top; ++z)
    if (at(ix, iy, z) != kSemanticNone) return false;
  return true;
}

bool Scene::free_at(const Vec2& p) const {
  Cell c = cell_of(p, resolution);
  return column_free(c.x, c.y);
}

std::vector<const ObjectInstance*> Scene::instances_of(const std::string& category) const {
  std::vector<const ObjectInstance*> out;
  for (const ObjectInstance& o : objects)
    if (o.category == category) out.push_back(&o);
  return out;
}

std::vector<uint16_t> Scene::semantic_ids_of(const std::string& category) const {
  std::vector<uint16_t> out;
  for (const ObjectInstance& o : objects)
    if (o.category == category) out.push_back(static_cast<uint16_t>(o.instance_id));
  return out;
}

bool Scene::has_category(const std::string& category) const {
  return !instances_of(category).empty();
}

StepResult apply_action(const Scene& scene, const AgentPose& pose, Action action) {
  switch (action) {
    case Action::Stop:
      return {pose, false};
    case Action::TurnLeft:
      return {{pose.position, wrap_angle(pose.yaw + kTurnAngle)}, false};
    case Action::TurnRight:
      return {{pose.position, wrap_angle(pose.yaw - kTurnAngle)}, false};
    case Action::MoveForward: {
      Vec2 target = pose.position + kStepSize * heading_vector(pose.yaw);
      if (!scene.free_at(target)) return {pose, true};
      return {{target, pose.yaw}, false};
    }
  }
  return {pose, false};
}

double geodesic_distance(const Scene& scene, const Vec2& a, const Vec2& b) {
  Cell ca = cell_of(a, scene.resolution);
  Cell cb = cell_of(b, scene.resolution);
  if (ca.x < 0 || ca.x >= scene.nx || ca.y < 0 || ca.y >= scene.ny ||
      cb.x < 0 || cb.x >= scene.nx || cb.y < 0 || cb.y >= scene.ny)
    throw OffMap("geodesic endpoint outside the scene grid");
  if (ca == cb) return 0.0;
  Grid2D<double> field = dijkstra_field(scene_occupancy(scene), ca, scene.resolution);
  return field.at(cb);
}

bool check_success(const Scene& scene, const AgentPose& pose, const std::string& goal_category,
                   double radius) {
  auto instances = scene.instances_of(goal_category);
  if (instances.empty()) throw UnknownCategory("no instance of category: " + goal_category);
  for (const ObjectInstance* obj : instances)
    for (const Vec2& vp : obj->viewpoints)
      if ((pose.position - vp).norm() < radius) return true;
  return false;
}

bool detect_goal(const Scene& scene, const Observation& obs, const std::string& goal_category,
                 double min_pixel_fraction) {
  std::vector<uint16_t> ids = scene.semantic_ids_of(goal_category);
  if (ids.empty()) return false;
  size_t count = 0;
  for (uint16_t s : obs.semantic.data())
    if (std::find(ids.begin(), ids.end(), s) != ids.end()) ++count;
  double threshold = min_pixel_fraction * static_cast<double>(obs.semantic.size());
  return static_cast<double>(count) > threshold;
}

bool line_of_sight(const Scene& scene, const Vec3& a, const Vec3& b, uint16_t ignore_id) {
  Vec3 d = b - a;
  double len = d.norm();
  if (len < 1e-12) return true;
  // Conservative sampling at sub-voxel pitch; exactness is not needed here.
  int steps = static_cast<int>(std::ceil(len / (scene.resolution * 0.25)));
  for (int i = 1; i < steps; ++i) {
    Vec3 p = a + d * (static_cast<double>(i) / steps);
    int x = static_cast<int>(std::floor(p.x() / scene.resolution));
    int y = static_cast<int>(std::floor(p.y() / scene.resolution));
    int z = static_cast<int>(std::floor(p.z() / scene.resolution));
    if (!scene.in_bounds(x, y, z)) continue;
    uint16_t v = scene.at(x, y, z);
    if (v != kSemanticNone && v != ignore_id) return false;
  }
  return true;
}

std::vector<Vec2> generate_viewpoints(const Scene& scene, const ObjectInstance& object) {
  std::vector<Vec2> out;
  for (int iy = 0; iy < scene.ny; ++iy) {
    for (int ix = 0; ix < scene.nx; ++ix) {
      if (!scene.column_free(ix, iy)) continue;
      Vec2 center = cell_center({ix, iy}, scene.resolution);
      bool ok = false;
      for (const Voxel& v : object.voxel_set) {
        Vec2 vc{(v.x + 0.5) * scene.resolution, (v.y + 0.5) * scene.resolution};
        if ((vc - center).norm() > kViewpointRadius) continue;
        Vec3 eye{center.x(), center.y(), scene.camera_height};
        Vec3 tgt{vc.x(), vc.y(), (v.z + 0.5) * scene.resolution};
        if (line_of_sight(scene, eye, tgt, static_cast<uint16_t>(object.instance_id))) {
          ok = true;
          break;
        }
      }
      if (ok) out.push_back(center);
    }
  }
  return out;
}

std::optional<ViewpointHit> nearest_goal_viewpoint(const Scene& scene, const Vec2& from,
                                                   const std::string& goal_category) {
  auto instances = scene.instances_of(goal_category);
  if (instances.empty()) throw UnknownCategory("no instance of category: " + goal_category);
  Cell src = cell_of(from, scene.resolution);
  if (src.x < 0 || src.x >= scene.nx || src.y < 0 || src.y >= scene.ny)
    throw OffMap("query point outside the scene grid");
  Grid2D<double> field = dijkstra_field(scene_occupancy(scene), src, scene.resolution);

  std::optional<ViewpointHit> best;
  for (const ObjectInstance* obj : instances) {
    for (const Vec2& vp : obj->viewpoints) {
      Cell c = cell_of(vp, scene.resolution);
      double d = (c == src) ? 0.0 : field.at(c);
      if (!std::isfinite(d)) continue;
      if (!best || d < best->geodesic) best = ViewpointHit{vp, d};
    }
  }
  return best;
}

void validate_scene(const Scene& scene) {
  if (scene.resolution <= 0.0) throw InvariantViolation("resolution must be positive");
  if (scene.nx <= 0 || scene.ny <= 0 || scene.nz <= 0)
    throw InvariantViolation("dims must be positive");
  if (scene.floor_z < 0 || scene.floor_z >= scene.nz)
    throw InvariantViolation("floor_z outside the grid");
  if (scene.camera_height > scene.agent_height)
    throw InvariantViolation("camera_height above agent_height");
  for (int iy = 0; iy < scene.ny; ++iy)
    for (int ix = 0; ix < scene.nx; ++ix)
      if (scene.at(ix, iy, scene.floor_z) != kSemanticFloor)
        throw InvariantViolation("floor layer must be fully occupied by floor");
  for (const ObjectInstance& obj : scene.objects) {
    if (obj.voxel_set.empty())
      throw InvariantViolation("object " + obj.category + " has no voxels");
    if (obj.viewpoints.empty())
      throw InvariantViolation("object " + obj.category + " has no viewpoints");
    for (const Vec2& vp : obj.viewpoints) {
      if (!scene.free_at(vp))
        throw InvariantViolation("viewpoint of " + obj.category + " not on a free floor cell");
      bool visible = false;
      for (const Voxel& v : obj.voxel_set) {
        Vec3 eye{vp.x(), vp.y(), scene.camera_height};
        Vec3 tgt{(v.x + 0.5) * scene.resolution, (v.y + 0.5) * scene.resolution,
                 (v.z + 0.5) * scene.resolution};
        if (line_of_sight(scene, eye, tgt, static_cast<uint16_t>(obj.instance_id))) {
          visible = true;
          break;
        }
      }
      if (!visible)
        throw InvariantViolation("viewpoint of " + obj.category + " has no line of sight");
    }
  }
}

}  // namespace memnav
