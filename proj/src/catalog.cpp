#include "semmap/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semmap/json_io.hpp"

namespace semmap {

using nlohmann::json;

std::string Catalog::default_dir() {
#ifdef SEMMAP_CATALOG_DIR
  return SEMMAP_CATALOG_DIR;
#else
  return "catalog";
#endif
}

Catalog Catalog::open(const std::string& dir) {
  std::ifstream in(dir + "/manifest.json");
  if (!in) throw MapError("cannot open catalog manifest in " + dir);
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw MapError(std::string("malformed catalog manifest: ") + e.what());
  }
  Catalog cat;
  for (const auto& je : manifest.at("entries")) {
    CatalogEntry e{.name = je.at("name").get<std::string>(),
                   .file = je.at("file").get<std::string>(),
                   .map = load_map_file(dir + "/" + je.at("file").get<std::string>()),
                   .source = je.at("source").get<std::string>()};
    if (je.contains("command")) e.command = je["command"].get<std::string>();
    if (je.contains("type")) e.type = je["type"].get<std::string>();
    if (je.contains("vertices")) e.vertices = je["vertices"].get<long long>();
    if (je.contains("chi")) e.chi = je["chi"].get<long long>();
    if (je.contains("orientable")) e.orientable = je["orientable"].get<bool>();

    if (e.vertices && e.map.vertex_count() != *e.vertices)
      throw MapError("catalog entry " + e.name + " has " +
                     std::to_string(e.map.vertex_count()) +
                     " vertices, manifest says " + std::to_string(*e.vertices));
    if (e.chi && e.map.euler_characteristic() != *e.chi)
      throw MapError("catalog entry " + e.name + " has wrong Euler characteristic");
    if (e.type) {
      auto t = e.map.semi_equivelar_type();
      if (!t || t->str() != *e.type)
        throw MapError("catalog entry " + e.name + " does not have type " + *e.type);
    }
    if (e.orientable && e.map.is_orientable() != *e.orientable)
      throw MapError("catalog entry " + e.name + " has wrong orientability");
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : entries_) {
    if (!known.empty()) known += ", ";
    known += e.name;
  }
  throw MapError("unknown catalog entry \"" + name + "\"; available: " + known);
}

PolyhedralMap to_anchor_convention(const PolyhedralMap& m) {
  // locate the anchors: all faces of the unique maximal size
  size_t smax = 0;
  for (const auto& f : m.ifaces()) smax = std::max(smax, f.size());
  std::vector<std::vector<int>> anchors;
  for (const auto& f : m.ifaces())
    if (f.size() == smax) anchors.push_back(f);
  if (anchors.size() != 3)
    throw MapError("anchor convention needs exactly 3 maximal faces, got " +
                   std::to_string(anchors.size()));
  {
    std::set<int> cover;
    for (const auto& a : anchors) cover.insert(a.begin(), a.end());
    if (static_cast<int>(cover.size()) != m.n() ||
        cover.size() != anchors.size() * smax)
      throw MapError("anchor faces do not partition the vertex set");
  }
  int s = static_cast<int>(smax);
  // role bases in the 1-based block convention: [1..s], [2s+1..3s], [s+1..2s]
  const long long base[3] = {1, 2LL * s + 1, s + 1LL};

  int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<Vertex>> best;
  auto encode = [&](const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::vector<Vertex>> enc;
    enc.reserve(faces.size());
    for (const auto& f : faces) {
      std::vector<Vertex> c = f;
      std::vector<Vertex> least = c;
      int sz = static_cast<int>(c.size());
      for (int refl = 0; refl < 2; ++refl) {
        for (int r = 0; r < sz; ++r) {
          std::vector<Vertex> cand(sz);
          for (int i = 0; i < sz; ++i) cand[i] = c[(r + i) % sz];
          if (cand < least) least = cand;
        }
        std::reverse(c.begin(), c.end());
      }
      enc.push_back(std::move(least));
    }
    std::sort(enc.begin(), enc.end());
    return enc;
  };

  std::vector<Vertex> relabel(m.n());
  for (auto& p : perm3) {
    for (int rot0 = 0; rot0 < s; ++rot0)
      for (int dir0 = -1; dir0 <= 1; dir0 += 2)
        for (int rot1 = 0; rot1 < s; ++rot1)
          for (int dir1 = -1; dir1 <= 1; dir1 += 2)
            for (int rot2 = 0; rot2 < s; ++rot2)
              for (int dir2 = -1; dir2 <= 1; dir2 += 2) {
                int rots[3] = {rot0, rot1, rot2};
                int dirs[3] = {dir0, dir1, dir2};
                for (int a = 0; a < 3; ++a) {
                  int role = p[a];
                  for (int i = 0; i < s; ++i) {
                    int idx = anchors[a][((rots[a] + dirs[a] * i) % s + s) % s];
                    relabel[idx] = base[role] + i;
                  }
                }
                std::vector<std::vector<Vertex>> faces;
                faces.reserve(m.ifaces().size());
                for (const auto& f : m.ifaces()) {
                  std::vector<Vertex> nf(f.size());
                  for (size_t i = 0; i < f.size(); ++i) nf[i] = relabel[f[i]];
                  faces.push_back(std::move(nf));
                }
                auto enc = encode(faces);
                if (best.empty() || enc < best) best = std::move(enc);
              }
  }
  return PolyhedralMap::from_faces(best, m.name());
}

}  // namespace semmap
