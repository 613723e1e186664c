#include "semmap/map.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace semmap {

namespace {

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::string cycle_key(const std::vector<int>& cyc) {
  std::vector<int> c = canonical_cycle(cyc);
  std::string key;
  for (int x : c) {
    key += std::to_string(x);
    key += ',';
  }
  return key;
}

}  // namespace

std::string face_str(const std::vector<Vertex>& face) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < face.size(); ++i) {
    if (i) out << ',';
    out << face[i];
  }
  out << ']';
  return out.str();
}

int PolyhedralMap::index_of(Vertex v) const {
  auto it = index_to_.find(v);
  if (it == index_to_.end())
    throw MapError("unknown vertex " + std::to_string(v));
  return it->second;
}

int PolyhedralMap::edge_id(int u, int v) const {
  auto it = edge_index_.find(edge_key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

bool PolyhedralMap::has_iface(const std::vector<int>& cycle) const {
  return face_keys_.count(cycle_key(cycle)) > 0;
}

int PolyhedralMap::iface_index(const std::vector<int>& cycle) const {
  auto it = face_keys_.find(cycle_key(cycle));
  return it == face_keys_.end() ? -1 : it->second;
}

PolyhedralMap PolyhedralMap::from_faces(std::vector<std::vector<Vertex>> faces,
                                        std::string name) {
  PolyhedralMap m;
  m.name_ = std::move(name);
  m.faces_ = std::move(faces);
  m.build_and_validate();
  return m;
}

void PolyhedralMap::build_and_validate() {
  if (faces_.empty()) throw MapError("empty face list");

  for (const auto& f : faces_) {
    if (f.size() < 3)
      throw MapError("degenerate face " + face_str(f) +
                     ": fewer than 3 vertices");
    std::set<Vertex> distinct(f.begin(), f.end());
    if (distinct.size() != f.size())
      throw MapError("degenerate face " + face_str(f) + ": repeated vertex");
    for (Vertex v : f)
      if (v < 0)
        throw MapError("negative vertex label " + std::to_string(v));
  }

  std::set<Vertex> label_set;
  for (const auto& f : faces_) label_set.insert(f.begin(), f.end());
  labels_.assign(label_set.begin(), label_set.end());
  for (size_t i = 0; i < labels_.size(); ++i)
    index_to_[labels_[i]] = static_cast<int>(i);

  ifaces_.reserve(faces_.size());
  for (const auto& f : faces_) {
    std::vector<int> g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = index_to_.at(f[i]);
    ifaces_.push_back(std::move(g));
  }

  // every edge in exactly 2 faces
  std::unordered_map<std::uint64_t, std::vector<int>> occ;
  for (size_t fi = 0; fi < ifaces_.size(); ++fi) {
    const auto& f = ifaces_[fi];
    for (size_t i = 0; i < f.size(); ++i) {
      int u = f[i], v = f[(i + 1) % f.size()];
      occ[edge_key(u, v)].push_back(static_cast<int>(fi));
    }
  }
  for (auto& [key, fs] : occ) {
    if (fs.size() != 2) {
      int u = static_cast<int>(key >> 32), v = static_cast<int>(key & 0xffffffffu);
      throw MapError("edge [" + std::to_string(labels_[u]) + "," +
                     std::to_string(labels_[v]) + "] in " +
                     std::to_string(fs.size()) + " face(s), expected 2");
    }
  }
  for (auto& [key, fs] : occ) {
    int u = static_cast<int>(key >> 32), v = static_cast<int>(key & 0xffffffffu);
    edge_index_[key] = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    edge_faces_.push_back({fs[0], fs[1]});
  }

  // polyhedrality: two faces meet in nothing, one vertex, or one common edge
  std::vector<std::vector<int>> faces_at(labels_.size());
  for (size_t fi = 0; fi < ifaces_.size(); ++fi)
    for (int v : ifaces_[fi]) faces_at[v].push_back(static_cast<int>(fi));
  std::unordered_map<std::uint64_t, int> shared;
  for (const auto& at : faces_at)
    for (size_t a = 0; a < at.size(); ++a)
      for (size_t b = a + 1; b < at.size(); ++b)
        ++shared[edge_key(at[a], at[b])];
  for (auto& [key, cnt] : shared) {
    if (cnt < 2) continue;
    int fa = static_cast<int>(key >> 32), fb = static_cast<int>(key & 0xffffffffu);
    if (cnt > 2)
      throw MapError("faces " + face_str(faces_[fa]) + " and " +
                     face_str(faces_[fb]) + " share " + std::to_string(cnt) +
                     " vertices");
    std::set<int> sa(ifaces_[fa].begin(), ifaces_[fa].end());
    std::vector<int> common;
    for (int v : ifaces_[fb])
      if (sa.count(v)) common.push_back(v);
    int eid = edge_id(common[0], common[1]);
    bool is_common_edge =
        eid >= 0 && ((edge_faces_[eid][0] == fa && edge_faces_[eid][1] == fb) ||
                     (edge_faces_[eid][0] == fb && edge_faces_[eid][1] == fa));
    if (!is_common_edge)
      throw MapError("faces " + face_str(faces_[fa]) + " and " +
                     face_str(faces_[fb]) +
                     " share two vertices that are not a common edge");
  }

  // rotation system: the faces at each vertex must close into a single cycle
  rot_faces_.resize(labels_.size());
  rot_gaps_.resize(labels_.size());
  for (int v = 0; v < n(); ++v) {
    const auto& at = faces_at[v];
    if (at.empty()) throw MapError("isolated vertex");  // unreachable
    // neighbors of v inside face f
    auto ends = [&](int f) {
      const auto& fc = ifaces_[f];
      int pos = -1;
      for (size_t i = 0; i < fc.size(); ++i)
        if (fc[i] == v) pos = static_cast<int>(i);
      int s = static_cast<int>(fc.size());
      return std::pair<int, int>(fc[(pos + s - 1) % s], fc[(pos + 1) % s]);
    };
    auto other_face_at = [&](int f, int nb) {
      int eid = edge_id(v, nb);
      const auto& pair = edge_faces_[eid];
      return pair[0] == f ? pair[1] : pair[0];
    };
    int start = *std::min_element(at.begin(), at.end());
    auto [a, b] = ends(start);
    int exit_nb = std::min(a, b);
    std::vector<int> rot = {start};
    std::vector<int> gaps;
    int cur = start, nb = exit_nb;
    while (true) {
      gaps.push_back(nb);
      int next = other_face_at(cur, nb);
      if (next == start) break;
      if (static_cast<int>(rot.size()) > static_cast<int>(at.size()))
        throw MapError("faces around vertex " + std::to_string(labels_[v]) +
                       " do not close into a single cycle");
      rot.push_back(next);
      auto [x, y] = ends(next);
      nb = (x == nb) ? y : x;
      cur = next;
    }
    if (rot.size() != at.size())
      throw MapError("faces around vertex " + std::to_string(labels_[v]) +
                     " do not form a single cycle (" +
                     std::to_string(rot.size()) + " of " +
                     std::to_string(at.size()) + " reached)");
    if (rot.size() < 3)
      throw MapError("vertex " + std::to_string(labels_[v]) +
                     " has degree below 3");
    rot_faces_[v] = std::move(rot);
    rot_gaps_[v] = std::move(gaps);
  }

  // connected edge graph
  {
    std::vector<char> seen(n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int g : rot_gaps_[u])
        if (!seen[g]) {
          seen[g] = 1;
          ++reached;
          q.push(g);
        }
    }
    if (reached != n()) throw MapError("edge graph is disconnected");
  }

  for (size_t fi = 0; fi < ifaces_.size(); ++fi)
    face_keys_[cycle_key(ifaces_[fi])] = static_cast<int>(fi);
  if (face_keys_.size() != ifaces_.size())
    throw MapError("duplicate face in face list");
}

VertexType PolyhedralMap::face_cycle_type(Vertex v) const {
  int vi = index_of(v);
  std::vector<int> sizes;
  sizes.reserve(rot_faces_[vi].size());
  for (int f : rot_faces_[vi])
    sizes.push_back(static_cast<int>(ifaces_[f].size()));
  return VertexType::from_sizes(sizes);
}

std::optional<VertexType> PolyhedralMap::semi_equivelar_type() const {
  VertexType t = face_cycle_type(labels_[0]);
  for (int vi = 1; vi < n(); ++vi)
    if (face_cycle_type(labels_[vi]) != t) return std::nullopt;
  return t;
}

bool PolyhedralMap::is_orientable() const {
  // propagate coherent orientations over the dual graph; a closed surface is
  // orientable iff each edge can be traversed once in each direction
  std::vector<int> orient(face_count(), 0);
  std::queue<int> q;
  orient[0] = 1;
  q.push(0);
  auto direction = [&](int f, int u, int v) {
    // +1 if f traverses u->v, -1 if v->u
    const auto& fc = ifaces_[f];
    int s = static_cast<int>(fc.size());
    for (int i = 0; i < s; ++i) {
      if (fc[i] == u && fc[(i + 1) % s] == v) return +1;
      if (fc[i] == v && fc[(i + 1) % s] == u) return -1;
    }
    throw MapError("edge not on face");  // unreachable
  };
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    const auto& fc = ifaces_[f];
    int s = static_cast<int>(fc.size());
    for (int i = 0; i < s; ++i) {
      int u = fc[i], v = fc[(i + 1) % s];
      int eid = edge_id(u, v);
      int g = edge_faces_[eid][0] == f ? edge_faces_[eid][1] : edge_faces_[eid][0];
      // coherent: g must traverse the edge in the opposite direction,
      // possibly after flipping g
      int want = direction(f, u, v) * orient[f] == 1 ? -1 : 1;
      int g_orient = direction(g, u, v) == want ? 1 : -1;
      if (orient[g] == 0) {
        orient[g] = g_orient;
        q.push(g);
      } else if (orient[g] != g_orient) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Vertex> PolyhedralMap::link_cycle(Vertex v) const {
  int vi = index_of(v);
  const auto& rot = rot_faces_[vi];
  const auto& gaps = rot_gaps_[vi];
  int d = static_cast<int>(rot.size());
  std::vector<Vertex> link;
  for (int i = 0; i < d; ++i) {
    int enter = gaps[(i + d - 1) % d];  // neighbor shared with previous face
    int exit = gaps[i];
    const auto& fc = ifaces_[rot[i]];
    int s = static_cast<int>(fc.size());
    int pos_v = -1, pos_a = -1;
    for (int j = 0; j < s; ++j) {
      if (fc[j] == vi) pos_v = j;
      if (fc[j] == enter) pos_a = j;
    }
    int dir = ((pos_a - pos_v + s) % s == 1) ? +1 : -1;
    // walk the face boundary from `enter` away from v, stopping before `exit`
    for (int j = pos_a; fc[(j + s) % s] != exit; j += dir)
      link.push_back(labels_[fc[(j + s) % s]]);
  }
  return link;
}

PolyhedralMap PolyhedralMap::relabeled(
    const std::unordered_map<Vertex, Vertex>& mapping) const {
  std::vector<std::vector<Vertex>> nf = faces_;
  for (auto& f : nf)
    for (auto& v : f) {
      auto it = mapping.find(v);
      if (it == mapping.end())
        throw MapError("relabeling misses vertex " + std::to_string(v));
      v = it->second;
    }
  return from_faces(std::move(nf), name_);
}

PolyhedralMap PolyhedralMap::mirrored() const {
  std::vector<std::vector<Vertex>> nf = faces_;
  for (auto& f : nf) std::reverse(f.begin(), f.end());
  return from_faces(std::move(nf), name_);
}

}  // namespace semmap
