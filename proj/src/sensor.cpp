#include "memnav/sensor.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace memnav {

namespace {

struct RayHit {
  bool hit = false;
  double t = 0.0;  // entry parameter along the (unit) ray, in meters
  uint16_t semantic = kSemanticNone;
};

// Exactly one step per voxel crossed (Amanatides-Woo traversal).
RayHit raycast(const Scene& scene, const Vec3& origin, const Vec3& dir, double t_limit) {
  const double res = scene.resolution;
  int vx = static_cast<int>(std::floor(origin.x() / res));
  int vy = static_cast<int>(std::floor(origin.y() / res));
  int vz = static_cast<int>(std::floor(origin.z() / res));

  int step[3];
  double t_max[3], t_delta[3];
  const double o[3] = {origin.x(), origin.y(), origin.z()};
  const double d[3] = {dir.x(), dir.y(), dir.z()};
  int v[3] = {vx, vy, vz};

  for (int i = 0; i < 3; ++i) {
    if (d[i] > 1e-15) {
      step[i] = 1;
      t_max[i] = ((v[i] + 1) * res - o[i]) / d[i];
      t_delta[i] = res / d[i];
    } else if (d[i] < -1e-15) {
      step[i] = -1;
      t_max[i] = (v[i] * res - o[i]) / d[i];
      t_delta[i] = res / -d[i];
    } else {
      step[i] = 0;
      t_max[i] = std::numeric_limits<double>::infinity();
      t_delta[i] = std::numeric_limits<double>::infinity();
    }
  }

  double t_entry = 0.0;
  while (t_entry <= t_limit) {
    if (scene.in_bounds(v[0], v[1], v[2])) {
      uint16_t s = scene.at(v[0], v[1], v[2]);
      if (s != kSemanticNone) return {true, t_entry, s};
    } else if (v[0] < 0 || v[0] >= scene.nx || v[1] < 0 || v[1] >= scene.ny) {
      break;  // left the grid horizontally; nothing further can be hit
    }
    int axis = 0;
    if (t_max[1] < t_max[axis]) axis = 1;
    if (t_max[2] < t_max[axis]) axis = 2;
    t_entry = t_max[axis];
    v[axis] += step[axis];
    t_max[axis] += t_delta[axis];
  }
  return {};
}

}  // namespace

Observation render(const Scene& scene, const AgentPose& pose, double yaw_offset,
                   const CameraModel& camera) {
  camera.validate();
  Observation obs;
  obs.depth = Grid2D<float>(camera.width, camera.height, static_cast<float>(camera.max_range));
  obs.semantic = Grid2D<uint16_t>(camera.width, camera.height, kSemanticNone);
  obs.pose = pose;
  obs.yaw_offset = yaw_offset;
  obs.camera_height = scene.camera_height;
  obs.camera = camera;

  Extrinsics ext = extrinsics(pose, yaw_offset, scene.camera_height);
  Mat3 r_t = ext.rotation.transpose();

  for (int py = 0; py < camera.height; ++py) {
    for (int px = 0; px < camera.width; ++px) {
      Vec3 dir_cam{(px + 0.5 - camera.cx) / camera.fx, (py + 0.5 - camera.cy) / camera.fy, 1.0};
      dir_cam.normalize();
      Vec3 dir_world = r_t * dir_cam;
      double t_limit = camera.max_range / dir_cam.z();
      RayHit hit = raycast(scene, ext.center, dir_world, t_limit);
      if (hit.hit) {
        double z = std::max(1e-6, hit.t * dir_cam.z());
        obs.depth.at(px, py) = static_cast<float>(z);
        obs.semantic.at(px, py) = hit.semantic;
      }
    }
  }
  return obs;
}

PanoramicObservation capture_panorama(const Scene& scene, const AgentPose& pose,
                                      const CameraModel& camera) {
  PanoramicObservation pano;
  for (int k = 0; k < 4; ++k) pano.views[k] = render(scene, pose, kPanoramaOffsets[k], camera);
  return pano;
}

namespace {

Rgb semantic_base_color(uint16_t id) {
  switch (id) {
    case kSemanticNone: return {12, 12, 24};
    case kSemanticFloor: return {96, 88, 80};
    case kSemanticWall: return {196, 196, 200};
    default: {
      // Deterministic palette; components stay below 240 so annotation
      // colors (pure green/blue/red/white) remain unambiguous.
      uint32_t h = static_cast<uint32_t>(id) * 2654435761u;
      return {static_cast<uint8_t>(60 + (h & 0x7f)), static_cast<uint8_t>(60 + ((h >> 8) & 0x7f)),
              static_cast<uint8_t>(60 + ((h >> 16) & 0x7f))};
    }
  }
}

}  // namespace

Image render_view_image(const Observation& obs) {
  Image img(obs.camera.width, obs.camera.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      Rgb base = semantic_base_color(obs.semantic.at(x, y));
      double shade = 1.0 - 0.65 * std::min(1.0, obs.depth.at(x, y) / obs.camera.max_range);
      for (int c = 0; c < 3; ++c) base[c] = static_cast<uint8_t>(base[c] * shade);
      img.at(x, y) = base;
    }
  }
  return img;
}

Image tile_panorama_image(const PanoramicObservation& pano) {
  const CameraModel& cam = pano.camera();
  Image img(2 * cam.width, 2 * cam.height);
  for (int k = 0; k < 4; ++k) {
    Image view = render_view_image(pano.views[k]);
    Cell origin = pano.tile_origin(k);
    for (int y = 0; y < view.height; ++y)
      for (int x = 0; x < view.width; ++x) img.at(origin.x + x, origin.y + y) = view.at(x, y);
  }
  return img;
}

void write_depth(const Observation& obs, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << "MNDEPTH " << obs.depth.nx() << " " << obs.depth.ny() << "\n";
  f.write(reinterpret_cast<const char*>(obs.depth.data().data()),
          static_cast<std::streamsize>(obs.depth.size() * sizeof(float)));
}

void write_semantic(const Observation& obs, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << "MNSEM " << obs.semantic.nx() << " " << obs.semantic.ny() << "\n";
  f.write(reinterpret_cast<const char*>(obs.semantic.data().data()),
          static_cast<std::streamsize>(obs.semantic.size() * sizeof(uint16_t)));
}

}  // namespace memnav
