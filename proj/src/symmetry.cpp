#include "semmap/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace semmap {

namespace {

// Flags of a map, encoded as 2*(face occurrence) + endpoint bit. The face
// occurrence (f, i) stands for the directed boundary step f[i] -> f[i+1];
// bit 0 selects f[i], bit 1 selects f[i+1]. The three involutions are
//   s0: other endpoint of the edge
//   s1: other edge of the face at the same vertex
//   s2: other face at the same edge
// and map automorphisms are exactly the flag bijections commuting with them.
struct FlagGraph {
  int nflags = 0;
  std::vector<int> s0, s1, s2;
  std::vector<int> vert;  // vertex index of each flag
  std::vector<int> face;  // face index of each flag
  std::vector<int> offset;

  static FlagGraph build(const PolyhedralMap& m) {
    FlagGraph g;
    const auto& faces = m.ifaces();
    g.offset.resize(faces.size() + 1, 0);
    for (size_t f = 0; f < faces.size(); ++f)
      g.offset[f + 1] = g.offset[f] + static_cast<int>(faces[f].size());
    g.nflags = 2 * g.offset[faces.size()];
    g.s0.resize(g.nflags);
    g.s1.resize(g.nflags);
    g.s2.resize(g.nflags);
    g.vert.resize(g.nflags);
    g.face.resize(g.nflags);

    auto flag_id = [&](int f, int i, int b) {
      return 2 * (g.offset[f] + i) + b;
    };
    for (size_t f = 0; f < faces.size(); ++f) {
      const auto& fc = faces[f];
      int s = static_cast<int>(fc.size());
      for (int i = 0; i < s; ++i) {
        for (int b = 0; b < 2; ++b) {
          int id = flag_id(static_cast<int>(f), i, b);
          int v = b == 0 ? fc[i] : fc[(i + 1) % s];
          g.vert[id] = v;
          g.face[id] = static_cast<int>(f);
          g.s0[id] = flag_id(static_cast<int>(f), i, 1 - b);
          g.s1[id] = b == 0 ? flag_id(static_cast<int>(f), (i + s - 1) % s, 1)
                            : flag_id(static_cast<int>(f), (i + 1) % s, 0);
          int u = fc[i], w = fc[(i + 1) % s];
          int eid = m.edge_id(u, w);
          const auto& ef = m.edge_faces(eid);
          int of = ef[0] == static_cast<int>(f) ? ef[1] : ef[0];
          const auto& oc = m.ifaces()[of];
          int os = static_cast<int>(oc.size());
          int j = -1;
          for (int k = 0; k < os; ++k) {
            int a = oc[k], c = oc[(k + 1) % os];
            if ((a == u && c == w) || (a == w && c == u)) j = k;
          }
          int ob = oc[j] == v ? 0 : 1;
          g.s2[id] = flag_id(of, j, ob);
        }
      }
    }
    return g;
  }

  // Deterministic base: least (vertex, other endpoint, face) triple.
  int base_flag() const {
    int best = 0;
    auto key = [&](int id) {
      return std::tuple<int, int, int>(vert[id], vert[s0[id]], face[id]);
    };
    for (int id = 1; id < nflags; ++id)
      if (key(id) < key(best)) best = id;
    return best;
  }
};

// Propagate base -> image across the flag graph of a (into b); returns the
// induced vertex map when consistent.
std::optional<std::vector<int>> propagate(const FlagGraph& fa,
                                          const FlagGraph& fb, int base,
                                          int image, int na, int nb) {
  if (fa.nflags != fb.nflags) return std::nullopt;
  std::vector<int> fimg(fa.nflags, -1);
  fimg[base] = image;
  std::queue<int> q;
  q.push(base);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    const int xs[3] = {fa.s0[x], fa.s1[x], fa.s2[x]};
    const int ys[3] = {fb.s0[fimg[x]], fb.s1[fimg[x]], fb.s2[fimg[x]]};
    for (int k = 0; k < 3; ++k) {
      if (fimg[xs[k]] == -1) {
        fimg[xs[k]] = ys[k];
        q.push(xs[k]);
      } else if (fimg[xs[k]] != ys[k]) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> vmap(na, -1);
  for (int x = 0; x < fa.nflags; ++x) {
    if (fimg[x] == -1) return std::nullopt;  // disconnected flag graph
    int v = fa.vert[x], w = fb.vert[fimg[x]];
    if (vmap[v] == -1)
      vmap[v] = w;
    else if (vmap[v] != w)
      return std::nullopt;
  }
  std::vector<char> hit(nb, 0);
  for (int v = 0; v < na; ++v) {
    if (vmap[v] < 0 || hit[vmap[v]]) return std::nullopt;
    hit[vmap[v]] = 1;
  }
  return vmap;
}

// Full check that the vertex map carries every face of a to a face of b.
bool maps_faces(const PolyhedralMap& a, const PolyhedralMap& b,
                const std::vector<int>& vmap) {
  for (const auto& f : a.ifaces()) {
    std::vector<int> g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = vmap[f[i]];
    if (!b.has_iface(g)) return false;
  }
  return true;
}

}  // namespace

long long flag_count(const PolyhedralMap& m) { return 4LL * m.edge_count(); }

AutGroup automorphism_group(const PolyhedralMap& m) {
  FlagGraph fg = FlagGraph::build(m);
  int base = fg.base_flag();
  std::set<VertexPermutation> found;
  for (int cand = 0; cand < fg.nflags; ++cand) {
    auto vmap = propagate(fg, fg, base, cand, m.n(), m.n());
    if (!vmap) continue;
    VertexPermutation p(std::move(*vmap));
    if (!maps_faces(m, m, p.img)) continue;
    found.insert(std::move(p));
  }
  AutGroup g;
  g.elements.assign(found.begin(), found.end());
  // greedy generating subset
  std::set<VertexPermutation> span;
  span.insert(VertexPermutation::identity(m.n()));
  for (size_t i = 0; i < g.elements.size(); ++i) {
    if (span.count(g.elements[i])) continue;
    g.generators.push_back(static_cast<int>(i));
    // close the span under the new generator
    std::queue<VertexPermutation> q;
    for (const auto& e : span) q.push(e);
    std::vector<VertexPermutation> gens;
    for (int gi : g.generators) gens.push_back(g.elements[gi]);
    while (!q.empty()) {
      VertexPermutation e = q.front();
      q.pop();
      for (const auto& h : gens) {
        VertexPermutation c = e.compose(h);
        if (span.insert(c).second) q.push(c);
      }
    }
  }
  return g;
}

GroupId group_trivial() { return {GroupId::Tag::trivial, 0, 1}; }
GroupId group_cyclic(int m) { return {GroupId::Tag::cyclic, m, m}; }
GroupId group_dihedral(int m) { return {GroupId::Tag::dihedral, m, 2LL * m}; }

std::string GroupId::str() const {
  switch (tag) {
    case Tag::trivial: return "trivial";
    case Tag::cyclic: return "Z" + std::to_string(m);
    case Tag::dihedral: return "D" + std::to_string(m);
    case Tag::other: return "other(" + std::to_string(order) + ")";
  }
  return "?";
}

GroupId identify_permutation_group(
    const std::vector<VertexPermutation>& elements) {
  long long n = static_cast<long long>(elements.size());
  if (n == 0) throw MapError("empty permutation set");
  if (n == 1) return group_trivial();
  for (const auto& e : elements)
    if (e.order() == n) return group_cyclic(static_cast<int>(n));
  if (n % 2 == 0) {
    long long m = n / 2;
    // dihedral: a cyclic subgroup of order m plus an involution inverting it
    for (const auto& r : elements) {
      if (r.order() != m) continue;
      // elements of <r>
      std::set<VertexPermutation> rot;
      VertexPermutation p = VertexPermutation::identity(r.size());
      for (long long k = 0; k < m; ++k) {
        rot.insert(p);
        p = p.compose(r);
      }
      VertexPermutation rinv = r.inverse();
      for (const auto& s : elements) {
        if (rot.count(s) || !s.is_involution() || s.is_identity()) continue;
        if (s.compose(r).compose(s) == rinv)
          return group_dihedral(static_cast<int>(m));
      }
    }
  }
  return {GroupId::Tag::other, 0, n};
}

GroupId identify_group(const AutGroup& g) {
  return identify_permutation_group(g.elements);
}

std::optional<std::unordered_map<Vertex, Vertex>> are_isomorphic(
    const PolyhedralMap& a, const PolyhedralMap& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count() || a.face_count() != b.face_count())
    return std::nullopt;
  {
    std::multiset<size_t> fa, fb;
    for (const auto& f : a.ifaces()) fa.insert(f.size());
    for (const auto& f : b.ifaces()) fb.insert(f.size());
    if (fa != fb) return std::nullopt;
  }
  FlagGraph ga = FlagGraph::build(a);
  FlagGraph gb = FlagGraph::build(b);
  int base = ga.base_flag();
  for (int cand = 0; cand < gb.nflags; ++cand) {
    auto vmap = propagate(ga, gb, base, cand, a.n(), b.n());
    if (!vmap) continue;
    if (!maps_faces(a, b, *vmap)) continue;
    std::unordered_map<Vertex, Vertex> out;
    for (int v = 0; v < a.n(); ++v)
      out[a.label_of(v)] = b.label_of((*vmap)[v]);
    return out;
  }
  return std::nullopt;
}

std::string canonical_certificate(const PolyhedralMap& m) {
  FlagGraph fg = FlagGraph::build(m);
  std::string best;
  std::vector<int> vlabel(m.n());
  std::vector<int> order;
  std::vector<char> seen(fg.nflags);
  for (int start = 0; start < fg.nflags; ++start) {
    std::fill(vlabel.begin(), vlabel.end(), -1);
    std::fill(seen.begin(), seen.end(), 0);
    int next = 0;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (vlabel[fg.vert[x]] == -1) vlabel[fg.vert[x]] = next++;
      const int xs[3] = {fg.s0[x], fg.s1[x], fg.s2[x]};
      for (int y : xs)
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
    // face-list encoding under the breadth-first relabeling
    std::vector<std::vector<int>> enc;
    enc.reserve(m.ifaces().size());
    for (const auto& f : m.ifaces()) {
      std::vector<int> g(f.size());
      for (size_t i = 0; i < f.size(); ++i) g[i] = vlabel[f[i]];
      enc.push_back(canonical_cycle(g));
    }
    std::sort(enc.begin(), enc.end());
    std::string s;
    for (const auto& f : enc) {
      for (int v : f) {
        s += std::to_string(v);
        s += ',';
      }
      s += ';';
    }
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<std::vector<Vertex>> vertex_orbits(const PolyhedralMap& m,
                                               const AutGroup& g) {
  std::vector<int> parent(m.n());
  for (int i = 0; i < m.n(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.elements)
    for (int v = 0; v < m.n(); ++v) {
      int a = find(v), b = find(e.img[v]);
      if (a != b) parent[a] = b;
    }
  std::map<int, std::vector<Vertex>> buckets;
  for (int v = 0; v < m.n(); ++v) buckets[find(v)].push_back(m.label_of(v));
  std::vector<std::vector<Vertex>> orbits;
  for (auto& [root, verts] : buckets) orbits.push_back(std::move(verts));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

bool is_vertex_transitive(const PolyhedralMap& m) {
  return vertex_orbits(m, automorphism_group(m)).size() == 1;
}

}  // namespace semmap
