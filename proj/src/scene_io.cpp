#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "memnav/scene.hpp"

namespace memnav {

namespace {

constexpr char kMagic[] = "memnav-scene v1";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct LineReader {
  std::istringstream in;
  int lineno = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-empty line; nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      return line;
    }
    return std::nullopt;
  }

  std::string next_required(const std::string& what) {
    auto l = next();
    if (!l) throw ParseError("unexpected end of scene file, expected " + what);
    return *l;
  }

  // Raw line (grid row); no comment stripping.
  std::string next_raw(const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("unexpected end of scene file, expected " + what);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad numeric value for " + what + ": " + s);
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer value for " + what + ": " + s);
  }
}

}  // namespace

Scene parse_scene(const std::string& text) {
  LineReader reader(text);
  if (reader.next_required("magic line") != kMagic) throw ParseError("missing scene magic line");

  Scene scene;
  std::map<char, uint16_t> letter_to_id;

  auto expect_kv = [&](const std::string& key) {
    auto toks = split_ws(reader.next_required(key));
    if (toks.size() < 2 || toks[0] != key) throw ParseError("expected '" + key + " <value>'");
    return toks;
  };

  scene.resolution = parse_double(expect_kv("resolution")[1], "resolution");
  auto dims = expect_kv("dims");
  if (dims.size() != 4) throw ParseError("dims needs three values");
  scene.nx = parse_int(dims[1], "nx");
  scene.ny = parse_int(dims[2], "ny");
  scene.nz = parse_int(dims[3], "nz");
  scene.floor_z = parse_int(expect_kv("floor_z")[1], "floor_z");
  scene.agent_height = parse_double(expect_kv("agent_height")[1], "agent_height");
  scene.camera_height = parse_double(expect_kv("camera_height")[1], "camera_height");

  if (scene.nx <= 0 || scene.ny <= 0 || scene.nz <= 0) throw ParseError("dims must be positive");
  if (scene.floor_z < 0 || scene.floor_z >= scene.nz) throw ParseError("floor_z outside dims");

  scene.voxels.assign(static_cast<size_t>(scene.nx) * scene.ny * scene.nz, kSemanticNone);
  scene.legend[kSemanticFloor] = "floor";
  scene.legend[kSemanticWall] = "wall";

  auto legend_hdr = expect_kv("legend");
  int n_legend = parse_int(legend_hdr[1], "legend count");
  for (int i = 0; i < n_legend; ++i) {
    auto toks = split_ws(reader.next_required("legend entry"));
    if (toks.size() != 2 || toks[0].size() != 1) throw ParseError("legend entry must be '<letter> <id>'");
    char letter = toks[0][0];
    if (letter < 'a' || letter > 'z') throw ParseError("legend letter must be a-z");
    int id = parse_int(toks[1], "legend id");
    if (id < kFirstObjectId) throw ParseError("object semantic ids start at 3");
    if (letter_to_id.count(letter)) throw ParseError("duplicate legend letter");
    letter_to_id[letter] = static_cast<uint16_t>(id);
  }

  // Voxel layers. The floor layer is synthesized, never stored.
  for (int iy = 0; iy < scene.ny; ++iy)
    for (int ix = 0; ix < scene.nx; ++ix) scene.at_mut(ix, iy, scene.floor_z) = kSemanticFloor;

  bool any_layer = false;
  std::string pending;
  for (;;) {
    auto line = reader.next();
    if (!line) throw ParseError("missing objects block");
    auto toks = split_ws(*line);
    if (!toks.empty() && toks[0] == "objects") {
      pending = *line;
      break;
    }
    if (toks.size() != 3 || toks[0] != "layer") throw ParseError("expected 'layer <z0> <z1>' or 'objects <n>'");
    int z0 = parse_int(toks[1], "layer z0");
    int z1 = parse_int(toks[2], "layer z1");
    if (z0 > z1 || z0 < 0 || z1 >= scene.nz) throw ParseError("bad layer range");
    if (z0 <= scene.floor_z && scene.floor_z <= z1)
      throw ParseError("floor layer is synthesized and must not be stored");
    any_layer = true;
    // Rows are written north-up: the first row is y = ny-1.
    for (int row = 0; row < scene.ny; ++row) {
      std::string grid_row = reader.next_raw("grid row");
      if (static_cast<int>(grid_row.size()) != scene.nx)
        throw ParseError("grid row width mismatch at line " + std::to_string(reader.lineno));
      int iy = scene.ny - 1 - row;
      for (int ix = 0; ix < scene.nx; ++ix) {
        char c = grid_row[static_cast<size_t>(ix)];
        uint16_t id;
        if (c == '.') id = kSemanticNone;
        else if (c == '#') id = kSemanticWall;
        else if (letter_to_id.count(c)) id = letter_to_id[c];
        else throw ParseError(std::string("unknown voxel character '") + c + "'");
        for (int z = z0; z <= z1; ++z) scene.at_mut(ix, iy, z) = id;
      }
    }
  }
  if (!any_layer) throw ParseError("scene has no voxel layers");

  auto obj_toks = split_ws(pending);
  if (obj_toks.size() != 2) throw ParseError("expected 'objects <n>'");
  int n_objects = parse_int(obj_toks[1], "object count");
  if (n_objects != static_cast<int>(letter_to_id.size()))
    throw ParseError("objects count must match legend entries");

  std::vector<bool> auto_viewpoints;
  for (int i = 0; i < n_objects; ++i) {
    auto toks = split_ws(reader.next_required("object header"));
    if (toks.size() != 3 || toks[0] != "object") throw ParseError("expected 'object <id> <category>'");
    ObjectInstance obj;
    obj.instance_id = parse_int(toks[1], "object id");
    obj.category = toks[2];
    bool known = false;
    for (auto& [letter, id] : letter_to_id) known |= (id == obj.instance_id);
    if (!known) throw ParseError("object id not present in legend: " + toks[1]);
    scene.legend[static_cast<uint16_t>(obj.instance_id)] = obj.category;

    auto vp_toks = split_ws(reader.next_required("viewpoints header"));
    if (vp_toks.size() != 2 || vp_toks[0] != "viewpoints")
      throw ParseError("expected 'viewpoints <n|auto>'");
    bool auto_vp = (vp_toks[1] == "auto");
    int n_vps = auto_vp ? 0 : parse_int(vp_toks[1], "viewpoint count");
    for (int v = 0; v < n_vps; ++v) {
      auto pt = split_ws(reader.next_required("viewpoint"));
      if (pt.size() != 2) throw ParseError("viewpoint must be '<x> <y>'");
      obj.viewpoints.push_back(
          {parse_double(pt[0], "viewpoint x"), parse_double(pt[1], "viewpoint y")});
    }
    auto_viewpoints.push_back(auto_vp);
    scene.objects.push_back(std::move(obj));
  }

  // Derive voxel sets and centroids from the grid. Saved scenes always carry
  // explicit viewpoints, so load -> save -> load is identity on the Scene.
  for (size_t i = 0; i < scene.objects.size(); ++i) {
    ObjectInstance& obj = scene.objects[i];
    Vec3 sum{0, 0, 0};
    for (int z = 0; z < scene.nz; ++z)
      for (int y = 0; y < scene.ny; ++y)
        for (int x = 0; x < scene.nx; ++x)
          if (scene.at(x, y, z) == obj.instance_id) {
            obj.voxel_set.push_back({x, y, z});
            sum += Vec3{(x + 0.5) * scene.resolution, (y + 0.5) * scene.resolution,
                        (z + 0.5) * scene.resolution};
          }
    if (obj.voxel_set.empty())
      throw ParseError("object " + obj.category + " has no voxels in any layer");
    obj.centroid = sum / static_cast<double>(obj.voxel_set.size());
    if (auto_viewpoints[i]) obj.viewpoints = generate_viewpoints(scene, obj);
  }

  validate_scene(scene);
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  std::ostringstream out;
  out << kMagic << "\n";
  out << "resolution " << fmt_double(scene.resolution) << "\n";
  out << "dims " << scene.nx << " " << scene.ny << " " << scene.nz << "\n";
  out << "floor_z " << scene.floor_z << "\n";
  out << "agent_height " << fmt_double(scene.agent_height) << "\n";
  out << "camera_height " << fmt_double(scene.camera_height) << "\n";

  std::map<uint16_t, char> id_to_letter;
  out << "legend " << scene.objects.size() << "\n";
  char next_letter = 'a';
  for (const ObjectInstance& obj : scene.objects) {
    id_to_letter[static_cast<uint16_t>(obj.instance_id)] = next_letter;
    out << next_letter << " " << obj.instance_id << "\n";
    ++next_letter;
  }

  auto layer_text = [&](int z) {
    std::string text;
    for (int row = 0; row < scene.ny; ++row) {
      int iy = scene.ny - 1 - row;
      for (int ix = 0; ix < scene.nx; ++ix) {
        uint16_t id = scene.at(ix, iy, z);
        char c;
        if (id == kSemanticNone) c = '.';
        else if (id == kSemanticWall) c = '#';
        else c = id_to_letter.at(id);
        text.push_back(c);
      }
      text.push_back('\n');
    }
    return text;
  };

  // Group identical consecutive non-floor, non-empty layers.
  int z = 0;
  while (z < scene.nz) {
    if (z == scene.floor_z) {
      ++z;
      continue;
    }
    std::string text = layer_text(z);
    bool empty = text.find_first_not_of(".\n") == std::string::npos;
    if (empty) {
      ++z;
      continue;
    }
    int z1 = z;
    while (z1 + 1 < scene.nz && z1 + 1 != scene.floor_z && layer_text(z1 + 1) == text) ++z1;
    out << "layer " << z << " " << z1 << "\n" << text;
    z = z1 + 1;
  }

  out << "objects " << scene.objects.size() << "\n";
  for (const ObjectInstance& obj : scene.objects) {
    out << "object " << obj.instance_id << " " << obj.category << "\n";
    out << "viewpoints " << obj.viewpoints.size() << "\n";
    for (const Vec2& vp : obj.viewpoints)
      out << fmt_double(vp.x()) << " " << fmt_double(vp.y()) << "\n";
  }
  return out.str();
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open scene file: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_scene(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << serialize_scene(scene);
}

}  // namespace memnav
