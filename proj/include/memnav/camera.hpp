#pragma once

#include "memnav/geometry.hpp"
#include "memnav/scene.hpp"

namespace memnav {

// Pinhole model. Image x right, y down; camera frame x right, y down,
// z forward (right-handed).
struct CameraModel {
  double fx = 80.0;
  double fy = 80.0;
  double cx = 80.0;
  double cy = 60.0;
  int width = 160;
  int height = 120;
  double max_range = 10.0;  // meters

  // 160x120 with a 90 degree horizontal FOV so four views tile the circle.
  static CameraModel standard() { return CameraModel{}; }

  Mat3 intrinsics() const {
    Mat3 k;
    k << fx, 0, cx, 0, fy, cy, 0, 0, 1;
    return k;
  }

  void validate() const {
    if (fx <= 0 || fy <= 0 || max_range <= 0 || cx < 0 || cx >= width || cy < 0 || cy >= height)
      throw InvariantViolation("bad camera model");
  }

  friend bool operator==(const CameraModel&, const CameraModel&) = default;
};

// World-to-camera rigid transform for an agent pose and a view offset.
// The camera looks level along heading yaw + yaw_offset at camera_height.
struct Extrinsics {
  Mat3 rotation;   // world -> camera
  Vec3 center;     // camera position in world coordinates

  Mat34 matrix() const {
    Mat34 m;
    m.block<3, 3>(0, 0) = rotation;
    m.col(3) = -rotation * center;
    return m;
  }
  Vec3 to_camera(const Vec3& world) const { return rotation * (world - center); }
  Vec3 to_world(const Vec3& cam) const { return rotation.transpose() * cam + center; }
  Vec3 forward() const { return rotation.row(2).transpose(); }
};

Extrinsics extrinsics(const AgentPose& pose, double yaw_offset, double camera_height);

// Pixel = (fx*X/Z + cx, fy*Y/Z + cy); w = Z (camera depth).
struct Projection {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};
Projection project(const CameraModel& cam, const Extrinsics& ext, const Vec3& world);

// Inverse of project for a pixel center and a camera-space depth.
Vec3 back_project(const CameraModel& cam, const Extrinsics& ext, int px, int py, double depth);

}  // namespace memnav
