#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>

namespace memnav {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat34 = Eigen::Matrix<double, 3, 4>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSqrt2 = 1.41421356237309504880;

// World axes: x east, y north, z up. Yaw is measured from +x,
// counterclockwise, and normalized to [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Signed minimal difference a-b in (-pi, pi].
inline double angle_diff(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  if (d > kPi) d -= kTwoPi;
  return d;
}

inline Vec2 heading_vector(double yaw) { return {std::cos(yaw), std::sin(yaw)}; }

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell cell_of(const Vec2& p, double resolution) {
  return {static_cast<int>(std::floor(p.x() / resolution)),
          static_cast<int>(std::floor(p.y() / resolution))};
}

inline Vec2 cell_center(const Cell& c, double resolution) {
  return {(c.x + 0.5) * resolution, (c.y + 0.5) * resolution};
}

}  // namespace memnav
