#include "memnav/camera.hpp"

namespace memnav {

Extrinsics extrinsics(const AgentPose& pose, double yaw_offset, double camera_height) {
  double h = wrap_angle(pose.yaw + yaw_offset);
  Vec3 fwd{std::cos(h), std::sin(h), 0.0};
  Vec3 right{std::sin(h), -std::cos(h), 0.0};
  Vec3 down{0.0, 0.0, -1.0};
  Mat3 r;
  r.row(0) = right;
  r.row(1) = down;
  r.row(2) = fwd;
  return {r, Vec3{pose.position.x(), pose.position.y(), camera_height}};
}

Projection project(const CameraModel& cam, const Extrinsics& ext, const Vec3& world) {
  Vec3 c = ext.to_camera(world);
  return {cam.fx * c.x() / c.z() + cam.cx, cam.fy * c.y() / c.z() + cam.cy, c.z()};
}

Vec3 back_project(const CameraModel& cam, const Extrinsics& ext, int px, int py, double depth) {
  double x = (px + 0.5 - cam.cx) / cam.fx * depth;
  double y = (py + 0.5 - cam.cy) / cam.fy * depth;
  return ext.to_world(Vec3{x, y, depth});
}

}  // namespace memnav
