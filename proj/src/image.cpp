#include "memnav/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "memnav/errors.hpp"

namespace memnav {

int rect_overlap_area(const IntRect& a, const IntRect& b) {
  int ox = std::max(0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  int oy = std::max(0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  return ox * oy;
}

std::string encode_ppm(const Image& img) {
  std::string out;
  out.reserve(32 + img.pixels.size() * 3);
  out += "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  for (const Rgb& p : img.pixels) {
    out.push_back(static_cast<char>(p[0]));
    out.push_back(static_cast<char>(p[1]));
    out.push_back(static_cast<char>(p[2]));
  }
  return out;
}

void save_ppm(const Image& img, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  std::string bytes = encode_ppm(img);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Image decode_ppm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P6" || w <= 0 || h <= 0 || maxval != 255) throw ParseError("not a P6 ppm");
  in.get();  // single whitespace after header
  Image img(w, h);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size() * 3));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size() * 3)) throw ParseError("truncated ppm payload");
  return img;
}

Image load_ppm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return decode_ppm(ss.str());
}

void fill_disc(Image& img, int cx, int cy, int radius, Rgb color) {
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy > radius * radius) continue;
      int x = cx + dx, y = cy + dy;
      if (img.in_bounds(x, y)) img.at(x, y) = color;
    }
  }
}

void draw_line(Image& img, int x0, int y0, int x1, int y1, Rgb color, int thickness) {
  int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
  int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  int r = std::max(0, thickness / 2);
  for (;;) {
    for (int oy = -r; oy <= r; ++oy)
      for (int ox = -r; ox <= r; ++ox)
        if (img.in_bounds(x0 + ox, y0 + oy)) img.at(x0 + ox, y0 + oy) = color;
    if (x0 == x1 && y0 == y1) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

namespace {

// 5x7 glyphs, one bit per pixel, row-major from the top.
constexpr uint8_t kDigitRows[11][7] = {
    {0x0e, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0e},  // 0
    {0x04, 0x0c, 0x04, 0x04, 0x04, 0x04, 0x0e},  // 1
    {0x0e, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1f},  // 2
    {0x1f, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0e},  // 3
    {0x02, 0x06, 0x0a, 0x12, 0x1f, 0x02, 0x02},  // 4
    {0x1f, 0x10, 0x1e, 0x01, 0x01, 0x11, 0x0e},  // 5
    {0x06, 0x08, 0x10, 0x1e, 0x11, 0x11, 0x0e},  // 6
    {0x1f, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08},  // 7
    {0x0e, 0x11, 0x11, 0x0e, 0x11, 0x11, 0x0e},  // 8
    {0x0e, 0x11, 0x11, 0x0f, 0x01, 0x02, 0x0c},  // 9
    {0x00, 0x00, 0x00, 0x1f, 0x00, 0x00, 0x00},  // -
};

int glyph_index(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c == '-') return 10;
  return -1;
}

}  // namespace

int text_width(const std::string& digits, int scale) {
  if (digits.empty()) return 0;
  return static_cast<int>(digits.size()) * 6 * scale - scale;  // 5px glyph + 1px gap
}

int text_height(int scale) { return 7 * scale; }

void draw_text(Image& img, int x, int y, const std::string& digits, Rgb color, int scale) {
  int cursor = x;
  for (char c : digits) {
    int gi = glyph_index(c);
    if (gi >= 0) {
      for (int ry = 0; ry < 7; ++ry) {
        for (int rx = 0; rx < 5; ++rx) {
          if (!(kDigitRows[gi][ry] & (1 << (4 - rx)))) continue;
          for (int sy = 0; sy < scale; ++sy)
            for (int sx = 0; sx < scale; ++sx) {
              int px = cursor + rx * scale + sx, py = y + ry * scale + sy;
              if (img.in_bounds(px, py)) img.at(px, py) = color;
            }
        }
      }
    }
    cursor += 6 * scale;
  }
}

}  // namespace memnav
