#include "semmap/covering.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace semmap {

namespace {

using VPair = std::pair<Vertex, Vertex>;

VPair ordered(Vertex a, Vertex b) { return a < b ? VPair{a, b} : VPair{b, a}; }

std::vector<Vertex> canonical_vertex_cycle(std::vector<Vertex> seq) {
  std::vector<Vertex> best = seq;
  size_t d = seq.size();
  for (int refl = 0; refl < 2; ++refl) {
    for (size_t r = 0; r < d; ++r) {
      std::vector<Vertex> cand(d);
      for (size_t i = 0; i < d; ++i) cand[i] = seq[(r + i) % d];
      if (cand < best) best = cand;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

// edge -> incident face indices of a face list
std::map<VPair, std::vector<int>> edge_table(
    const std::vector<std::vector<Vertex>>& faces) {
  std::map<VPair, std::vector<int>> t;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi];
    for (size_t i = 0; i < f.size(); ++i)
      t[ordered(f[i], f[(i + 1) % f.size()])].push_back(static_cast<int>(fi));
  }
  return t;
}

void validate_bordered(const BorderedMap& piece) {
  const auto& faces = piece.faces;
  int r = static_cast<int>(piece.boundary_a.size());
  for (const auto& f : faces) {
    if (f.size() < 3)
      throw MapError("cycle inadmissible: cut face " + face_str(f) +
                     " degenerates");
    std::set<Vertex> distinct(f.begin(), f.end());
    if (distinct.size() != f.size())
      throw MapError("cycle inadmissible: cut face " + face_str(f) +
                     " repeats a vertex");
  }
  std::set<VPair> boundary_edges;
  for (int i = 0; i < r; ++i) {
    boundary_edges.insert(
        ordered(piece.boundary_a[i], piece.boundary_a[(i + 1) % r]));
    boundary_edges.insert(
        ordered(piece.boundary_b[i], piece.boundary_b[(i + 1) % r]));
  }
  auto edges = edge_table(faces);
  for (const auto& [e, fs] : edges) {
    size_t want = boundary_edges.count(e) ? 1 : 2;
    if (fs.size() != want)
      throw MapError("cycle inadmissible: edge [" + std::to_string(e.first) +
                     "," + std::to_string(e.second) + "] in " +
                     std::to_string(fs.size()) + " face(s), expected " +
                     std::to_string(want));
  }
  for (const auto& e : boundary_edges)
    if (!edges.count(e))
      throw MapError("cycle inadmissible: boundary edge missing from faces");

  // pairwise face intersections stay at most a common edge
  std::map<std::pair<int, int>, int> shared;
  {
    std::map<Vertex, std::vector<int>> at;
    for (size_t fi = 0; fi < faces.size(); ++fi)
      for (Vertex v : faces[fi]) at[v].push_back(static_cast<int>(fi));
    for (auto& [v, fs] : at)
      for (size_t a = 0; a < fs.size(); ++a)
        for (size_t b = a + 1; b < fs.size(); ++b) ++shared[{fs[a], fs[b]}];
  }
  for (auto& [pair, cnt] : shared) {
    if (cnt < 2) continue;
    if (cnt > 2)
      throw MapError("cycle inadmissible: cut faces share " +
                     std::to_string(cnt) + " vertices");
    std::set<Vertex> sa(faces[pair.first].begin(), faces[pair.first].end());
    std::vector<Vertex> common;
    for (Vertex v : faces[pair.second])
      if (sa.count(v)) common.push_back(v);
    auto it = edges.find(ordered(common[0], common[1]));
    bool ok = it != edges.end() && it->second.size() == 2 &&
              ((it->second[0] == pair.first && it->second[1] == pair.second) ||
               (it->second[0] == pair.second && it->second[1] == pair.first));
    if (!ok)
      throw MapError(
          "cycle inadmissible: cut faces share two vertices without a common "
          "edge");
  }

  // connectivity
  {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [e, fs] : edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::set<Vertex> seen;
    std::queue<Vertex> q;
    q.push(adj.begin()->first);
    seen.insert(adj.begin()->first);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u])
        if (seen.insert(w).second) q.push(w);
    }
    if (seen.size() != adj.size())
      throw MapError("cycle inadmissible: separating (cut piece disconnects)");
  }

  // local structure: one closed fan at interior vertices, one open fan at
  // boundary vertices
  {
    std::map<Vertex, std::set<int>> at;
    for (size_t fi = 0; fi < faces.size(); ++fi)
      for (Vertex v : faces[fi]) at[v].insert(static_cast<int>(fi));
    std::set<Vertex> boundary_verts(piece.boundary_a.begin(),
                                    piece.boundary_a.end());
    boundary_verts.insert(piece.boundary_b.begin(), piece.boundary_b.end());
    for (const auto& [v, fs] : at) {
      // count face-fan components at v via shared edges through v
      std::map<int, std::vector<int>> nbr;
      for (int f : fs) {
        const auto& fc = faces[f];
        int s = static_cast<int>(fc.size());
        int pos = -1;
        for (int i = 0; i < s; ++i)
          if (fc[i] == v) pos = i;
        for (Vertex u : {fc[(pos + 1) % s], fc[(pos + s - 1) % s]}) {
          auto it = edges.find(ordered(v, u));
          if (it->second.size() == 2) {
            int g = it->second[0] == f ? it->second[1] : it->second[0];
            nbr[f].push_back(g);
          }
        }
      }
      std::set<int> seen;
      int components = 0;
      for (int f : fs) {
        if (seen.count(f)) continue;
        ++components;
        std::queue<int> q;
        q.push(f);
        seen.insert(f);
        while (!q.empty()) {
          int g = q.front();
          q.pop();
          for (int h : nbr[g])
            if (seen.insert(h).second) q.push(h);
        }
      }
      if (components != 1)
        throw MapError("cycle inadmissible: faces at vertex " +
                       std::to_string(v) + " split into " +
                       std::to_string(components) + " fans");
      (void)boundary_verts;
    }
  }
}

}  // namespace

CycleSpec CycleSpec::of(const PolyhedralMap& m, std::vector<Vertex> verts) {
  if (verts.size() < 3)
    throw MapError("cutting cycle needs at least 3 vertices");
  std::set<Vertex> distinct(verts.begin(), verts.end());
  if (distinct.size() != verts.size())
    throw MapError("cutting cycle repeats a vertex");
  for (size_t i = 0; i < verts.size(); ++i) {
    int u = m.index_of(verts[i]);
    int v = m.index_of(verts[(i + 1) % verts.size()]);
    if (m.edge_id(u, v) < 0)
      throw MapError("cutting cycle uses missing edge [" +
                     std::to_string(verts[i]) + "," +
                     std::to_string(verts[(i + 1) % verts.size()]) + "]");
  }
  CycleSpec c;
  c.vertices = std::move(verts);
  return c;
}

std::string CycleSpec::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) out << ',';
    out << vertices[i];
  }
  out << ')';
  return out.str();
}

std::vector<Vertex> BorderedMap::vertex_labels() const {
  std::set<Vertex> s;
  for (const auto& f : faces) s.insert(f.begin(), f.end());
  return {s.begin(), s.end()};
}

int BorderedMap::vertex_count() const {
  return static_cast<int>(vertex_labels().size());
}

std::pair<int, int> BorderedMap::edge_counts() const {
  auto edges = edge_table(faces);
  int interior = 0, boundary = 0;
  for (const auto& [e, fs] : edges)
    (fs.size() == 2 ? interior : boundary) += 1;
  return {interior, boundary};
}

BorderedMap cut_along(const PolyhedralMap& m, const CycleSpec& cycle) {
  const int r = cycle.length();
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = m.index_of(cycle.vertices[i]);
  std::vector<int> cycle_pos(m.n(), -1);
  for (int i = 0; i < r; ++i) {
    if (cycle_pos[c[i]] != -1) throw MapError("cutting cycle repeats a vertex");
    cycle_pos[c[i]] = i;
  }

  // side of each incident face at each cycle vertex: the rotation at c_i is
  // split by the two cycle edges into two arcs
  std::vector<std::map<int, int>> side(r);  // side[i][face] in {0,1}
  for (int i = 0; i < r; ++i) {
    int prev = c[(i + r - 1) % r], next = c[(i + 1) % r];
    const auto& rot = m.rot_faces(c[i]);
    const auto& gaps = m.rot_gaps(c[i]);
    int d = static_cast<int>(rot.size());
    int gp = -1, gn = -1;
    for (int k = 0; k < d; ++k) {
      if (gaps[k] == prev) gp = k;
      if (gaps[k] == next) gn = k;
    }
    if (gp < 0 || gn < 0 || gp == gn)
      throw MapError("cycle inadmissible: arcs not separated at vertex " +
                     std::to_string(m.label_of(c[i])));
    // faces strictly after gap gn up to gap gp belong to arc 0
    for (int k = (gn + 1) % d; ; k = (k + 1) % d) {
      side[i][rot[k]] = 0;
      if (k == gp) break;
    }
    for (int k = (gp + 1) % d; ; k = (k + 1) % d) {
      side[i][rot[k]] = 1;
      if (k == gn) break;
    }
  }

  // propagate a consistent orientation of the two sides along the cycle:
  // sigma[i] names which arc at c_i keeps the original labels
  std::vector<int> sigma(r, -1);
  {
    auto edge_faces_of = [&](int i) {
      int eid = m.edge_id(c[i], c[(i + 1) % r]);
      return m.edge_faces(eid);
    };
    auto first = edge_faces_of(0);
    int anchor = std::min(first[0], first[1]);
    sigma[0] = side[0].at(anchor);
    for (int i = 0; i < r; ++i) {
      auto ef = edge_faces_of(i);
      int keep = side[i].at(ef[0]) == sigma[i] ? ef[0] : ef[1];
      if (side[i].at(keep) != sigma[i])
        throw MapError("cycle inadmissible: arc partition broken at vertex " +
                       std::to_string(cycle.vertices[i]));
      int j = (i + 1) % r;
      int next_sigma = side[j].at(keep);
      if (sigma[j] == -1)
        sigma[j] = next_sigma;
      else if (sigma[j] != next_sigma)
        throw MapError(
            "cycle inadmissible: inconsistent side propagation (one-sided "
            "cycle)");
    }
  }

  // rewrite faces; cycle vertex on the far side gets its fresh copy
  Vertex wbase = m.vertex_labels().back() + 1;
  BorderedMap piece;
  piece.boundary_a = cycle.vertices;
  for (int i = 0; i < r; ++i) piece.boundary_b.push_back(wbase + i);
  for (size_t fi = 0; fi < m.ifaces().size(); ++fi) {
    std::vector<Vertex> nf;
    for (int v : m.ifaces()[fi]) {
      int pos = cycle_pos[v];
      if (pos < 0) {
        nf.push_back(m.label_of(v));
      } else {
        auto it = side[pos].find(static_cast<int>(fi));
        if (it == side[pos].end())
          throw MapError("cycle inadmissible: face misses the arc partition");
        nf.push_back(it->second == sigma[pos] ? m.label_of(v) : wbase + pos);
      }
    }
    piece.faces.push_back(std::move(nf));
  }

  validate_bordered(piece);
  return piece;
}

std::vector<CycleSpec> admissible_cycles(const PolyhedralMap& m, int max_len) {
  if (max_len < 3) throw MapError("max cycle length must be at least 3");
  std::set<std::vector<Vertex>> found;
  int n = m.n();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u : m.rot_gaps(v)) adj[v].insert(u);

  // simple cycles with the start as least vertex, canonical direction
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int u : adj[v]) {
      if (u == start && static_cast<int>(path.size()) >= 3) {
        if (path[1] < path.back()) {
          std::vector<Vertex> labels;
          for (int x : path) labels.push_back(m.label_of(x));
          auto canon = canonical_vertex_cycle(labels);
          if (found.count(canon)) continue;
          try {
            cut_along(m, CycleSpec::of(m, labels));
            found.insert(canon);
          } catch (const MapError&) {
          }
        }
        continue;
      }
      if (u <= start || used[u]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      used[u] = 1;
      path.push_back(u);
      extend(start, u);
      path.pop_back();
      used[u] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    extend(s, s);
  }

  std::vector<CycleSpec> out;
  for (const auto& verts : found) out.push_back(CycleSpec::of(m, verts));
  std::sort(out.begin(), out.end(), [](const CycleSpec& a, const CycleSpec& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

CoverReport build_cover(const PolyhedralMap& m, const CycleSpec& cycle,
                        int fold) {
  if (fold < 1) throw MapError("fold count must be at least 1");
  BorderedMap piece = cut_along(m, cycle);
  const int n = m.n();
  const int r = cycle.length();

  std::map<Vertex, int> fresh_pos;
  for (int i = 0; i < r; ++i) fresh_pos[piece.boundary_b[i]] = i;

  std::vector<std::vector<Vertex>> cover_faces;
  for (int t = 0; t < fold; ++t) {
    for (const auto& f : piece.faces) {
      std::vector<Vertex> nf;
      for (Vertex v : f) {
        auto it = fresh_pos.find(v);
        if (it == fresh_pos.end()) {
          nf.push_back(m.index_of(v) + static_cast<long long>(t) * n);
        } else {
          int copy = (t + 1) % fold;
          nf.push_back(m.index_of(cycle.vertices[it->second]) +
                       static_cast<long long>(copy) * n);
        }
      }
      cover_faces.push_back(std::move(nf));
    }
  }

  std::string cover_name = m.name().empty() ? "cover" : m.name();
  std::vector<int> img(static_cast<size_t>(fold) * n);
  for (int i = 0; i < fold * n; ++i) img[i] = (i + n) % (fold * n);
  CoverReport report{
      PolyhedralMap::from_faces(std::move(cover_faces),
                                cover_name + "_cover" + std::to_string(fold)),
      fold, VertexPermutation(std::move(img)), std::nullopt, std::nullopt};
  for (const auto& f : report.cover.ifaces()) {
    std::vector<int> g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = report.deck_rotation.img[f[i]];
    if (!report.cover.has_iface(g))
      throw MapError("internal: deck rotation does not preserve the cover");
  }
  if (fold >= 2) report.predicted_group = predict_cover_group(m, cycle, fold);
  return report;
}

// ---------------------------------------------------------------------------
// Side-swapping symmetry.
//
// The cyclic cover is built from the crossing data of the cutting cycle: a
// dual step between the two faces of a cycle edge crosses the cut with sign
// +1 (from the kept side to the far side) or -1. An automorphism of the base
// map whose action on dual cycles negates the total crossing number lifts to
// the cover and inverts the deck rotation; an involution with this property
// is what turns the cover group dihedral. The bordered piece itself need not
// carry any boundary-exchanging involution (the swap may move the cutting
// cycle to a parallel one, as it does for the reference fixtures), so the
// check runs on the base map.

namespace {

struct CrossingData {
  // sign of the dual step f -> g across edge eid; 0 off the cutting cycle
  std::map<std::tuple<int, int, int>, int> sign;

  int step(int f, int g, int eid) const {
    auto it = sign.find({f, g, eid});
    return it == sign.end() ? 0 : it->second;
  }
};

CrossingData crossing_data(const PolyhedralMap& m, const CycleSpec& cycle) {
  // reuse the side analysis of the cut: per cycle vertex, the rotation is
  // split into two arcs, and a globally consistent side labeling exists
  const int r = cycle.length();
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = m.index_of(cycle.vertices[i]);

  std::vector<std::map<int, int>> side(r);
  for (int i = 0; i < r; ++i) {
    int prev = c[(i + r - 1) % r], next = c[(i + 1) % r];
    const auto& rot = m.rot_faces(c[i]);
    const auto& gaps = m.rot_gaps(c[i]);
    int d = static_cast<int>(rot.size());
    int gp = -1, gn = -1;
    for (int k = 0; k < d; ++k) {
      if (gaps[k] == prev) gp = k;
      if (gaps[k] == next) gn = k;
    }
    for (int k = (gn + 1) % d;; k = (k + 1) % d) {
      side[i][rot[k]] = 0;
      if (k == gp) break;
    }
    for (int k = (gp + 1) % d;; k = (k + 1) % d) {
      side[i][rot[k]] = 1;
      if (k == gn) break;
    }
  }
  std::vector<int> sigma(r, -1);
  auto edge_faces_of = [&](int i) {
    return m.edge_faces(m.edge_id(c[i], c[(i + 1) % r]));
  };
  auto first = edge_faces_of(0);
  sigma[0] = side[0].at(std::min(first[0], first[1]));
  for (int i = 0; i < r; ++i) {
    auto ef = edge_faces_of(i);
    int keep = side[i].at(ef[0]) == sigma[i] ? ef[0] : ef[1];
    int j = (i + 1) % r;
    int next_sigma = side[j].at(keep);
    if (sigma[j] == -1)
      sigma[j] = next_sigma;
    else if (sigma[j] != next_sigma)
      throw MapError("cycle inadmissible: inconsistent side propagation");
  }
  CrossingData data;
  for (int i = 0; i < r; ++i) {
    int eid = m.edge_id(c[i], c[(i + 1) % r]);
    auto ef = m.edge_faces(eid);
    int kept = side[i].at(ef[0]) == sigma[i] ? ef[0] : ef[1];
    int far = ef[0] == kept ? ef[1] : ef[0];
    data.sign[{kept, far, eid}] = +1;
    data.sign[{far, kept, eid}] = -1;
  }
  return data;
}

// closed dual walks generating the dual cycle space: one per non-tree edge
struct DualWalks {
  // each walk is a list of steps (f, g, eid)
  std::vector<std::vector<std::tuple<int, int, int>>> walks;
};

DualWalks dual_cycle_basis(const PolyhedralMap& m) {
  int nf = m.face_count();
  std::vector<int> parent(nf, -1), parent_edge(nf, -1);
  std::vector<char> seen(nf, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::vector<int> order;
  for (int eid = 0; eid < m.edge_count(); ++eid) (void)eid;
  std::set<int> tree_edges;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    order.push_back(f);
    const auto& fc = m.ifaces()[f];
    int s = static_cast<int>(fc.size());
    for (int i = 0; i < s; ++i) {
      int eid = m.edge_id(fc[i], fc[(i + 1) % s]);
      const auto& ef = m.edge_faces(eid);
      int g = ef[0] == f ? ef[1] : ef[0];
      if (!seen[g]) {
        seen[g] = 1;
        parent[g] = f;
        parent_edge[g] = eid;
        tree_edges.insert(eid);
        q.push(g);
      }
    }
  }
  auto path_to_root = [&](int f) {
    std::vector<std::tuple<int, int, int>> steps;
    while (parent[f] != -1) {
      steps.push_back({f, parent[f], parent_edge[f]});
      f = parent[f];
    }
    return steps;
  };
  DualWalks basis;
  for (int eid = 0; eid < m.edge_count(); ++eid) {
    if (tree_edges.count(eid)) continue;
    const auto& ef = m.edge_faces(eid);
    int f = ef[0], g = ef[1];
    // root -> f, f -> g, g -> root
    std::vector<std::tuple<int, int, int>> walk;
    auto down = path_to_root(f);
    std::reverse(down.begin(), down.end());
    for (auto [a, b, e] : down) walk.push_back({b, a, e});
    walk.push_back({f, g, eid});
    for (auto st : path_to_root(g)) walk.push_back(st);
    basis.walks.push_back(std::move(walk));
  }
  return basis;
}

}  // namespace

std::optional<VertexPermutation> side_swap_symmetry(const PolyhedralMap& m,
                                                    const CycleSpec& cycle) {
  CrossingData data = crossing_data(m, cycle);
  DualWalks basis = dual_cycle_basis(m);
  auto walk_value = [&](const std::vector<std::tuple<int, int, int>>& walk) {
    long long h = 0;
    for (auto [f, g, eid] : walk) h += data.step(f, g, eid);
    return h;
  };
  auto mapped_value = [&](const std::vector<std::tuple<int, int, int>>& walk,
                          const VertexPermutation& alpha) {
    long long h = 0;
    for (auto [f, g, eid] : walk) {
      auto [u, v] = m.edge_ends(eid);
      int eimg = m.edge_id(alpha.img[u], alpha.img[v]);
      auto face_image = [&](int fid) {
        const auto& fc = m.ifaces()[fid];
        std::vector<int> img(fc.size());
        for (size_t i = 0; i < fc.size(); ++i) img[i] = alpha.img[fc[i]];
        return m.iface_index(img);
      };
      h += data.step(face_image(f), face_image(g), eimg);
    }
    return h;
  };

  AutGroup aut = automorphism_group(m);
  for (const auto& alpha : aut.elements) {
    if (alpha.is_identity() || !alpha.is_involution()) continue;
    bool inverts = true;
    for (const auto& walk : basis.walks) {
      if (mapped_value(walk, alpha) != -walk_value(walk)) {
        inverts = false;
        break;
      }
    }
    if (inverts) return alpha;
  }
  return std::nullopt;
}

GroupId predict_cover_group(const PolyhedralMap& m, const CycleSpec& cycle,
                            int fold) {
  if (fold < 2) throw MapError("group prediction needs fold count >= 2");
  return side_swap_symmetry(m, cycle) ? group_dihedral(fold)
                                      : group_cyclic(fold);
}

}  // namespace semmap
