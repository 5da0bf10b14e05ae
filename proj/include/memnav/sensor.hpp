#pragma once

#include <array>
#include <filesystem>

#include "memnav/camera.hpp"
#include "memnav/grid.hpp"
#include "memnav/image.hpp"
#include "memnav/scene.hpp"

namespace memnav {

// Egocentric depth + semantic capture. Depth is camera-space z in meters
// (max_range where nothing was hit); semantic 0 means no hit.
struct Observation {
  Grid2D<float> depth;
  Grid2D<uint16_t> semantic;
  AgentPose pose;
  double yaw_offset = 0.0;
  double camera_height = 0.0;
  CameraModel camera;

  Extrinsics view_extrinsics() const { return extrinsics(pose, yaw_offset, camera_height); }

  friend bool operator==(const Observation& a, const Observation& b) {
    return a.depth == b.depth && a.semantic == b.semantic && a.pose == b.pose &&
           a.yaw_offset == b.yaw_offset && a.camera_height == b.camera_height &&
           a.camera == b.camera;
  }
};

inline constexpr std::array<double, 4> kPanoramaOffsets{0.0, kPi / 2, kPi, 3 * kPi / 2};

// Four views at 90 degree offsets, tiled 2x2 row-major:
// offset 0 top-left, pi/2 top-right, pi bottom-left, 3pi/2 bottom-right.
struct PanoramicObservation {
  std::array<Observation, 4> views;

  const AgentPose& pose() const { return views[0].pose; }
  const CameraModel& camera() const { return views[0].camera; }
  int tiled_width() const { return 2 * camera().width; }
  int tiled_height() const { return 2 * camera().height; }

  Cell tile_origin(int view_index) const {
    return {(view_index % 2) * camera().width, (view_index / 2) * camera().height};
  }
  // view index and view-local pixel for a tiled-image pixel
  std::pair<int, Cell> locate(const Cell& tiled_pixel) const {
    int vx = tiled_pixel.x / camera().width;
    int vy = tiled_pixel.y / camera().height;
    int k = vy * 2 + vx;
    return {k, {tiled_pixel.x - vx * camera().width, tiled_pixel.y - vy * camera().height}};
  }
};

Observation render(const Scene& scene, const AgentPose& pose, double yaw_offset,
                   const CameraModel& camera);

PanoramicObservation capture_panorama(const Scene& scene, const AgentPose& pose,
                                      const CameraModel& camera);

// Deterministic visualization of a view: semantic palette shaded by depth.
Image render_view_image(const Observation& obs);
Image tile_panorama_image(const PanoramicObservation& pano);

// Binary exports: depth as float32 grid, semantic as uint16 grid, both with
// a small ascii header.
void write_depth(const Observation& obs, const std::filesystem::path& path);
void write_semantic(const Observation& obs, const std::filesystem::path& path);

}  // namespace memnav
