#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace memnav {

using Rgb = std::array<uint8_t, 3>;

inline constexpr Rgb kMarkerGreen{0, 255, 0};
inline constexpr Rgb kMarkerBlue{0, 0, 255};
inline constexpr Rgb kLabelWhite{255, 255, 255};
inline constexpr Rgb kTrajectoryRed{255, 0, 0};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major

  Image() = default;
  Image(int w, int h, Rgb fill = {0, 0, 0})
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  Rgb& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  const Rgb& at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }

  friend bool operator==(const Image&, const Image&) = default;
};

struct IntRect {
  int x = 0, y = 0, w = 0, h = 0;
  int area() const { return w * h; }
};

int rect_overlap_area(const IntRect& a, const IntRect& b);

// Binary PPM (P6). The artifact's portable image format for panoramas,
// annotated views and overlays.
std::string encode_ppm(const Image& img);
void save_ppm(const Image& img, const std::filesystem::path& path);
Image decode_ppm(const std::string& bytes);
Image load_ppm(const std::filesystem::path& path);

void fill_disc(Image& img, int cx, int cy, int radius, Rgb color);
void draw_line(Image& img, int x0, int y0, int x1, int y1, Rgb color, int thickness = 1);

// 5x7 bitmap digits (plus '-'), scaled by an integer factor.
int text_width(const std::string& digits, int scale = 1);
int text_height(int scale = 1);
void draw_text(Image& img, int x, int y, const std::string& digits, Rgb color, int scale = 1);

}  // namespace memnav
