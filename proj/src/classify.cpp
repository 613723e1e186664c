#include "semmap/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "semmap/census.hpp"
#include "semmap/symmetry.hpp"

namespace semmap {

namespace {

int debug_relax() {
  const char* e = getenv("SEMMAP_DEBUG_RELAX");
  return e ? atoi(e) : 0;
}

std::uint64_t ekey(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// contiguous subword of the cyclic sequence, in either direction
bool embeds_in_cycle(const std::vector<int>& word, const std::vector<int>& cyc) {
  int d = static_cast<int>(cyc.size());
  int len = static_cast<int>(word.size());
  if (len > d) return false;
  for (int dir : {1, -1})
    for (int s = 0; s < d; ++s) {
      bool ok = true;
      for (int k = 0; k < len && ok; ++k)
        if (cyc[((s + dir * k) % d + d) % d] != word[k]) ok = false;
      if (ok) return true;
    }
  return false;
}

struct EdgeSlot {
  std::array<int, 2> f{-1, -1};
  int count() const { return (f[0] >= 0) + (f[1] >= 0); }
  bool add(int id) {
    if (f[0] < 0) { f[0] = id; return true; }
    if (f[1] < 0) { f[1] = id; return true; }
    return false;
  }
  void remove(int id) {
    if (f[1] == id) f[1] = -1;
    else if (f[0] == id) { f[0] = f[1]; f[1] = -1; }
  }
};

std::string face_set_key(std::vector<std::vector<int>> faces) {
  for (auto& f : faces) f = canonical_cycle(f);
  std::sort(faces.begin(), faces.end());
  std::string key;
  for (const auto& f : faces) {
    for (int v : f) { key += std::to_string(v); key += ','; }
    key += ';';
  }
  return key;
}

constexpr size_t kMemoCap = 4000000;

struct Searcher {
  // target
  std::vector<int> type_cycle;
  std::map<int, int> type_counts;
  int d = 0;
  int n = 0;
  long long node_budget = 0;
  std::set<std::pair<int, int>> adjacent_sizes;  // pairs embeddable in the cycle

  // state
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> vfaces;
  std::unordered_map<std::uint64_t, EdgeSlot> edges;
  std::map<int, long long> face_budget;
  int verts_used = 0;

  long long nodes = 0;
  bool budget_hit = false;
  std::unordered_set<std::string> memo;
  std::map<std::string, std::vector<std::vector<int>>> found;  // cert -> faces
  long long completions = 0;

  void init(const VertexType& type, int n_, long long budget,
            const std::map<int, long long>& xs) {
    type_cycle = type.sizes();
    d = type.degree();
    n = n_;
    node_budget = budget;
    for (int s : type_cycle) ++type_counts[s];
    face_budget.insert(xs.begin(), xs.end());
    vfaces.assign(n, {});
    for (auto [a, ca] : type_counts)
      for (auto [b, cb] : type_counts)
        if (embeds_in_cycle({a, b}, type_cycle)) adjacent_sizes.insert({a, b});
  }

  int edge_face_count(int u, int v) const {
    auto it = edges.find(ekey(u, v));
    return it == edges.end() ? 0 : it->second.count();
  }

  int size_count_at(int v, int s) const {
    int c = 0;
    for (int f : vfaces[v])
      if (static_cast<int>(faces[f].size()) == s) ++c;
    return c;
  }

  void place(const std::vector<int>& face, int fresh) {
    int id = static_cast<int>(faces.size());
    faces.push_back(face);
    int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) edges[ekey(face[i], face[(i + 1) % s])].add(id);
    for (int v : face) vfaces[v].push_back(id);
    --face_budget[s];
    verts_used += fresh;
  }

  void unplace(int fresh) {
    int id = static_cast<int>(faces.size()) - 1;
    const std::vector<int> face = faces.back();
    int s = static_cast<int>(face.size());
    for (int i = 0; i < s; ++i) {
      auto key = ekey(face[i], face[(i + 1) % s]);
      auto it = edges.find(key);
      it->second.remove(id);
      if (it->second.count() == 0) edges.erase(it);
    }
    for (int v : face) vfaces[v].pop_back();
    ++face_budget[s];
    verts_used -= fresh;
    faces.pop_back();
  }

  // Full local check of the fan at vertex v: face sizes stay within the
  // type's multiset; the fan arcs stay contiguous subwords of the type
  // cycle; a closed fan must use exactly d faces and equal the type cycle.
  bool vertex_ok(int v) {
    const auto& fs = vfaces[v];
    int k = static_cast<int>(fs.size());
    if (k > d) return false;
    {
      std::map<int, int> counts;
      for (int f : fs) ++counts[static_cast<int>(faces[f].size())];
      for (auto [s, c] : counts) {
        auto it = type_counts.find(s);
        if (it == type_counts.end() || c > it->second) return false;
      }
    }
    // adjacency between faces at v through shared edges at v
    std::map<int, std::vector<int>> nbr;
    for (int f : fs) {
      const auto& fc = faces[f];
      int s = static_cast<int>(fc.size());
      int pos = -1;
      for (int i = 0; i < s; ++i)
        if (fc[i] == v) pos = i;
      for (int u : {fc[(pos + 1) % s], fc[(pos + s - 1) % s]}) {
        auto it = edges.find(ekey(v, u));
        if (it != edges.end() && it->second.count() == 2) {
          int g = it->second.f[0] == f ? it->second.f[1] : it->second.f[0];
          nbr[f].push_back(g);
        }
      }
    }
    std::set<int> seen;
    for (int f : fs) {
      if (seen.count(f)) continue;
      // walk the component
      std::vector<int> comp;
      std::queue<int> q;
      q.push(f);
      seen.insert(f);
      bool closed = true;
      while (!q.empty()) {
        int g = q.front();
        q.pop();
        comp.push_back(g);
        if (nbr[g].size() < 2) closed = false;
        if (nbr[g].size() > 2) return false;
        for (int h : nbr[g])
          if (seen.insert(h).second) q.push(h);
      }
      if (closed) {
        if (static_cast<int>(comp.size()) != k || k != d) return false;
        // read the closed fan in cyclic order and compare with the type
        std::vector<int> order = {comp[0]};
        int prev = -1, cur = comp[0];
        while (static_cast<int>(order.size()) < k) {
          int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
          order.push_back(next);
          prev = cur;
          cur = next;
        }
        std::vector<int> sizes;
        for (int g : order) sizes.push_back(static_cast<int>(faces[g].size()));
        if (canonical_cycle(sizes) != type_cycle) return false;
      } else {
        // read the path from an endpoint
        int end = -1;
        for (int g : comp)
          if (nbr[g].size() <= 1) { end = g; break; }
        std::vector<int> order = {end};
        int prev = -1, cur = end;
        while (true) {
          int next = -1;
          for (int h : nbr[cur])
            if (h != prev) next = h;
          if (next == -1) break;
          order.push_back(next);
          prev = cur;
          cur = next;
        }
        if (order.size() != comp.size()) return false;
        std::vector<int> sizes;
        for (int g : order) sizes.push_back(static_cast<int>(faces[g].size()));
        if (!(debug_relax() & 4) && !embeds_in_cycle(sizes, type_cycle))
          return false;
        if (k == d) return false;  // full but not closed: cannot extend
      }
    }
    return true;
  }

  // Candidate second faces for the open edge (u,v), written [u,v,w2,...].
  // forced_w2 >= 0 pins the first new vertex (anchored canonical seed).
  void extend_edge(int u, int v, int forced_w2) {
    int g_at_edge = -1;
    {
      auto it = edges.find(ekey(u, v));
      g_at_edge = it->second.f[0];
    }
    int gsize = static_cast<int>(faces[g_at_edge].size());
    for (auto& [s, budget] : face_budget) {
      if (budget <= 0) continue;
      if (!(debug_relax() & 1) && !adjacent_sizes.count({gsize, s})) continue;
      if (size_count_at(u, s) >= type_counts[s]) continue;
      if (size_count_at(v, s) >= type_counts[s]) continue;
      if (static_cast<int>(vfaces[u].size()) >= d) continue;
      if (static_cast<int>(vfaces[v].size()) >= d) continue;
      std::vector<int> face = {u, v};
      std::unordered_map<int, std::vector<int>> hits;
      for (int f : vfaces[u]) hits[f].push_back(0);
      for (int f : vfaces[v]) hits[f].push_back(1);
      bool seed_ok = true;
      for (auto& [f, pos] : hits)
        if (pos.size() >= 2 && f != g_at_edge) {
          // u and v both on f but (u,v) is the cut edge; f must carry it too,
          // which only g_at_edge and the new face may do
          seed_ok = false;
        }
      if (!seed_ok) continue;
      grow_face(face, s, hits, 0, forced_w2);
      if (budget_hit) return;
    }
  }

  bool pair_is_edge_of(int f, int x, int y) const {
    const auto& fc = faces[f];
    int s = static_cast<int>(fc.size());
    for (int i = 0; i < s; ++i) {
      int a = fc[i], b = fc[(i + 1) % s];
      if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
  }

  void grow_face(std::vector<int>& face, int s,
                 std::unordered_map<int, std::vector<int>>& hits, int fresh,
                 int forced_next) {
    if (budget_hit) return;
    int k = static_cast<int>(face.size());
    if (k == s) {
      if (edge_face_count(face.back(), face[0]) >= 2) return;
      commit_face(face, fresh);
      return;
    }
    auto try_vertex = [&](int x, bool is_fresh) {
      if (budget_hit) return;
      for (int w : face)
        if (w == x) return;
      if (edge_face_count(face.back(), x) >= 2) return;
      if (!is_fresh) {
        if (static_cast<int>(vfaces[x].size()) >= d) return;
        if (size_count_at(x, s) >= type_counts[s]) return;
        // rough adjacency feasibility across the entry edge
        auto it = edges.find(ekey(face.back(), x));
        if (!(debug_relax() & 1) && it != edges.end() &&
            it->second.count() == 1) {
          int h = it->second.f[0];
          if (!adjacent_sizes.count(
                  {static_cast<int>(faces[h].size()), s}))
            return;
        }
      }
      // incremental face-intersection discipline
      std::vector<int> touched;
      bool ok = true;
      if (!is_fresh) {
        for (int f : vfaces[x]) {
          auto& pos = hits[f];
          pos.push_back(k);
          touched.push_back(f);
          if (pos.size() >= 3) ok = false;
          if (!(debug_relax() & 2) && pos.size() == 2) {
            int p = pos[0], q = pos[1];
            bool adj_now = (q == p + 1);
            bool adj_wrap = (p == 0 && q == s - 1 && k == s - 1);
            if (adj_now || adj_wrap) {
              if (!pair_is_edge_of(f, face[p], x)) ok = false;
            } else if (p == 0 && k < s - 1) {
              // only legal if x ends up last; it will not
              ok = false;
            } else {
              ok = false;
            }
          }
        }
      }
      if (ok) {
        face.push_back(x);
        grow_face(face, s, hits, fresh + (is_fresh ? 1 : 0),
                  -1);
        face.pop_back();
      }
      for (int f : touched) {
        hits[f].pop_back();
        if (hits[f].empty()) hits.erase(f);
      }
    };
    if (forced_next >= 0) {
      try_vertex(forced_next, false);
      return;
    }
    for (int x = 0; x < verts_used; ++x) try_vertex(x, false);
    if (verts_used + fresh < n) try_vertex(verts_used + fresh, true);
  }

  void commit_face(const std::vector<int>& face, int fresh) {
    place(face, fresh);
    bool ok = true;
    for (int v : face)
      if (!vertex_ok(v)) { ok = false; break; }
    if (ok) rec();
    unplace(fresh);
  }

  void rec() {
    if (budget_hit) return;
    if (++nodes > node_budget) { budget_hit = true; return; }

    // most-constrained incomplete vertex
    int best = -1, best_free = 1 << 30;
    for (int v = 0; v < verts_used; ++v) {
      int k = static_cast<int>(vfaces[v].size());
      if (k == 0 || k >= d) continue;
      int free_slots = d - k;
      if (free_slots < best_free) { best_free = free_slots; best = v; }
    }
    if (best == -1) {
      finalize();
      return;
    }
    if (memo.size() < kMemoCap) {
      if (!memo.insert(face_set_key(faces)).second) return;
    }
    // lowest open edge at the chosen vertex
    int u = best, w = -1;
    std::set<int> nbs;
    for (int f : vfaces[u]) {
      const auto& fc = faces[f];
      int sz = static_cast<int>(fc.size());
      int pos = -1;
      for (int i = 0; i < sz; ++i)
        if (fc[i] == u) pos = i;
      nbs.insert(fc[(pos + 1) % sz]);
      nbs.insert(fc[(pos + sz - 1) % sz]);
    }
    for (int x : nbs)
      if (edge_face_count(u, x) == 1) { w = x; break; }
    if (w == -1) return;  // no open edge yet the vertex is incomplete: dead
    extend_edge(u, w, -1);
  }

  void finalize() {
    ++completions;
    if (verts_used != n) return;
    for (int v = 0; v < n; ++v)
      if (static_cast<int>(vfaces[v].size()) != d) return;
    for (auto [s, left] : face_budget)
      if (left != 0) return;
    std::vector<std::vector<Vertex>> vf;
    vf.reserve(faces.size());
    for (const auto& f : faces) vf.emplace_back(f.begin(), f.end());
    try {
      PolyhedralMap m = PolyhedralMap::from_faces(std::move(vf));
      auto t = m.semi_equivelar_type();
      if (!t || t->sizes() != type_cycle) return;
      std::string cert = canonical_certificate(m);
      if (!found.count(cert)) found[cert] = faces;
    } catch (const MapError&) {
      // a completion that fails full validation is not a map of the type
    }
  }
};

}  // namespace

ClassifyResult classify_type(const VertexType& type, long long chi,
                             const ClassifyOptions& opts) {
  ClassifyResult result;
  auto n = vertex_count(type, chi);
  if (!n) return result;  // no admissible vertex count, hence no maps
  auto xs = face_vector(type, *n);
  if (!xs) return result;

  long long link = type.link_length();
  if (1 + link > *n) return result;  // the closed star alone would overflow

  Searcher sr;
  sr.init(type, static_cast<int>(*n), opts.node_budget, *xs);

  bool anchored = false;
  if (opts.strategy != ClassifyOptions::Strategy::generic) {
    auto ms = type.size_multiset();
    int smax = ms.back().first;
    bool unique_max = ms.back().second == 1 && ms.size() > 1;
    if (unique_max && *n % smax == 0) anchored = true;
    if (opts.strategy == ClassifyOptions::Strategy::anchored && !anchored)
      throw MapError("anchored strategy unavailable for this type");
  }

  if (anchored) {
    int smax = *std::max_element(sr.type_cycle.begin(), sr.type_cycle.end());
    int anchors = static_cast<int>(*n / smax);
    // the anchor faces partition the vertex set, so all labels exist upfront
    sr.verts_used = static_cast<int>(*n);
    for (int t = 0; t < anchors; ++t) {
      std::vector<int> f(smax);
      for (int i = 0; i < smax; ++i) f[i] = t * smax + i;
      sr.place(f, 0);
    }
    // canonical first filler: on the seam edge (0, smax-1) of the first
    // anchor, with its new corner pinned to the second anchor's first vertex
    if (anchors >= 2)
      sr.extend_edge(0, smax - 1, smax);
    else
      sr.rec();
  } else {
    // canonical seed: the full fan of vertex 0, link labeled 1..L in order
    int L = static_cast<int>(link);
    int e = 1;
    auto wrap = [&](int p) { return 1 + ((p - 1) % L); };
    bool seed_ok = true;
    std::vector<std::vector<int>> seed;
    for (int j = 0; j < sr.d; ++j) {
      int s = sr.type_cycle[j];
      std::vector<int> f = {0};
      for (int i = 0; i < s - 1; ++i) f.push_back(wrap(e + i));
      seed.push_back(std::move(f));
      e += s - 2;
    }
    sr.verts_used = L + 1;
    for (const auto& f : seed) {
      if (sr.face_budget[static_cast<int>(f.size())] <= 0) seed_ok = false;
      if (!seed_ok) break;
      sr.place(f, 0);
      for (int v : f)
        if (!sr.vertex_ok(v)) seed_ok = false;
      if (!seed_ok) break;
    }
    if (seed_ok) sr.rec();
  }

  result.nodes = sr.nodes;
  result.completions = sr.completions;
  result.complete = !sr.budget_hit;
  if (sr.budget_hit)
    throw MapError("classification node budget exhausted after " +
                   std::to_string(sr.nodes) +
                   " steps; result would be incomplete");
  for (auto& [cert, fs] : sr.found) {
    std::vector<std::vector<Vertex>> vf;
    vf.reserve(fs.size());
    for (const auto& f : fs) vf.emplace_back(f.begin(), f.end());
    result.maps.push_back(PolyhedralMap::from_faces(std::move(vf)));
  }
  return result;
}

// ---------------------------------------------------------------------------
// blocks and block-cycle certificates

std::string Block::str() const {
  std::ostringstream out;
  out << '[' << v[0] << ',' << v[1] << ',' << v[2] << '|' << v[3] << ']';
  return out.str();
}

std::vector<Block> blocks(const PolyhedralMap& m, int gonality) {
  const auto& fs = m.ifaces();
  std::map<std::array<Vertex, 4>, Block> seen;
  for (int t1 = 0; t1 < static_cast<int>(fs.size()); ++t1) {
    if (fs[t1].size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      int b = fs[t1][i];
      int c = fs[t1][(i + 1) % 3];
      int a = fs[t1][(i + 2) % 3];
      int eid = m.edge_id(b, c);
      const auto& ef = m.edge_faces(eid);
      int t2 = ef[0] == t1 ? ef[1] : ef[0];
      if (fs[t2].size() != 3) continue;
      int dvert = -1;
      for (int v : fs[t2])
        if (v != b && v != c) dvert = v;
      auto other_at = [&](int x, int y, int f) {
        const auto& p = m.edge_faces(m.edge_id(x, y));
        return p[0] == f ? p[1] : p[0];
      };
      int anchor1 = other_at(a, b, t1);
      if (static_cast<int>(fs[anchor1].size()) != gonality) continue;
      if (anchor1 == t2) continue;
      int anchor2 = other_at(c, dvert, t2);
      if (static_cast<int>(fs[anchor2].size()) != gonality) continue;
      if (anchor2 == t1) continue;
      // each anchor meets the block in exactly its attaching edge
      std::set<int> bset = {a, b, c, dvert};
      auto meets_exactly_edge = [&](int anchor) {
        int cnt = 0;
        for (int v : fs[anchor])
          if (bset.count(v)) ++cnt;
        return cnt == 2;
      };
      if (!meets_exactly_edge(anchor1) || !meets_exactly_edge(anchor2))
        continue;
      std::array<Vertex, 4> tup = {m.label_of(a), m.label_of(b), m.label_of(c),
                                   m.label_of(dvert)};
      std::array<Vertex, 4> rev = {tup[3], tup[2], tup[1], tup[0]};
      bool forward = tup < rev;
      std::array<Vertex, 4> canon = forward ? tup : rev;
      if (!seen.count(canon)) {
        Block blk;
        blk.v = canon;
        blk.anchor_ab = forward ? anchor1 : anchor2;
        blk.anchor_cd = forward ? anchor2 : anchor1;
        seen.emplace(canon, blk);
      }
    }
  }
  std::vector<Block> out;
  for (auto& [tup, blk] : seen) out.push_back(blk);
  return out;
}

BlockCycleCertificate block_certificate(const PolyhedralMap& m, int gonality) {
  if (gonality % 2 != 0)
    throw MapError("block cycles are defined for even gonality only");
  BlockCycleCertificate cert;
  auto blks = blocks(m, gonality);
  cert.block_count = static_cast<long long>(blks.size());
  if (blks.empty()) return cert;

  const auto& fs = m.ifaces();
  auto edge_pos_on = [&](int f, Vertex la, Vertex lb) {
    int x = m.index_of(la), y = m.index_of(lb);
    const auto& fc = fs[f];
    int s = static_cast<int>(fc.size());
    for (int i = 0; i < s; ++i) {
      int p = fc[i], q = fc[(i + 1) % s];
      if ((p == x && q == y) || (p == y && q == x)) return i;
    }
    return -1;
  };

  // attachments: (anchor face, boundary edge position) -> (block, side)
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> attach;
  for (size_t k = 0; k < blks.size(); ++k) {
    const auto& B = blks[k];
    attach[{B.anchor_ab, edge_pos_on(B.anchor_ab, B.v[0], B.v[1])}].push_back(
        {static_cast<int>(k), 0});
    attach[{B.anchor_cd, edge_pos_on(B.anchor_cd, B.v[2], B.v[3])}].push_back(
        {static_cast<int>(k), 1});
  }
  int half = gonality / 2;
  auto partners = [&](int k, int side) {
    const auto& B = blks[k];
    int anchor = side == 0 ? B.anchor_ab : B.anchor_cd;
    int pos = side == 0 ? edge_pos_on(anchor, B.v[0], B.v[1])
                        : edge_pos_on(anchor, B.v[2], B.v[3]);
    int anti = (pos + half) % gonality;
    auto it = attach.find({anchor, anti});
    if (it == attach.end()) return std::vector<std::pair<int, int>>{};
    return it->second;
  };

  cert.regular = true;
  for (size_t k = 0; k < blks.size() && cert.regular; ++k)
    for (int side = 0; side < 2; ++side)
      if (partners(static_cast<int>(k), side).size() != 1) cert.regular = false;

  // block-to-block distances through shared or edge-adjacent triangles
  auto triangle_zone = [&](int k) {
    std::set<int> zone;
    const auto& B = blks[k];
    int t1 = m.iface_index({m.index_of(B.v[0]), m.index_of(B.v[1]),
                            m.index_of(B.v[2])});
    int t2 = m.iface_index({m.index_of(B.v[1]), m.index_of(B.v[2]),
                            m.index_of(B.v[3])});
    for (int t : {t1, t2}) {
      zone.insert(t);
      const auto& fc = fs[t];
      for (int i = 0; i < 3; ++i) {
        const auto& p = m.edge_faces(m.edge_id(fc[i], fc[(i + 1) % 3]));
        for (int g : {p[0], p[1]})
          if (fs[g].size() == 3) zone.insert(g);
      }
    }
    return zone;
  };
  std::vector<std::set<int>> zones;
  for (size_t k = 0; k < blks.size(); ++k)
    zones.push_back(triangle_zone(static_cast<int>(k)));
  auto zone_adjacent = [&](int a, int b) {
    for (int t : zones[a])
      if (zones[b].count(t)) return true;
    return false;
  };
  auto dbb = [&](int a, int b) -> long long {
    if (a == b) return 0;
    std::vector<int> dist(blks.size(), -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (x == b) break;
      for (size_t y = 0; y < blks.size(); ++y)
        if (dist[y] == -1 && zone_adjacent(x, static_cast<int>(y))) {
          dist[y] = dist[x] + 1;
          q.push(static_cast<int>(y));
        }
    }
    if (dist[b] < 0) return 1 << 20;  // disconnected, sentinel
    return dist[b] - 1;               // intermediate blocks on the path
  };

  if (cert.regular) {
    std::vector<char> visited(blks.size(), 0);
    for (size_t k0 = 0; k0 < blks.size(); ++k0) {
      if (visited[k0]) continue;
      // walk the alternating block/anchor cycle
      std::vector<int> cycle_blocks;
      int cur = static_cast<int>(k0), in_side = 1;  // leave through side 0 first
      while (!visited[cur]) {
        visited[cur] = 1;
        cycle_blocks.push_back(cur);
        int out_side = 1 - in_side;
        auto next = partners(cur, out_side)[0];
        cur = next.first;
        in_side = next.second;
      }
      std::vector<long long> ds;
      int len = static_cast<int>(cycle_blocks.size());
      for (int i = 0; i < len; ++i)
        ds.push_back(dbb(cycle_blocks[i], cycle_blocks[(i + 1) % len]));
      std::sort(ds.begin(), ds.end());
      cert.cycles.push_back(std::move(ds));
    }
  } else {
    // fallback: connected components of the antipodal relation
    std::vector<char> visited(blks.size(), 0);
    for (size_t k0 = 0; k0 < blks.size(); ++k0) {
      if (visited[k0]) continue;
      std::vector<int> comp;
      std::queue<int> q;
      q.push(static_cast<int>(k0));
      visited[k0] = 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        comp.push_back(x);
        for (int side = 0; side < 2; ++side)
          for (auto [y, ys] : partners(x, side))
            if (!visited[y]) {
              visited[y] = 1;
              q.push(y);
            }
      }
      std::vector<long long> ds;
      for (int x : comp)
        for (int side = 0; side < 2; ++side)
          for (auto [y, ys] : partners(x, side))
            if (x < y) ds.push_back(dbb(x, y));
      std::sort(ds.begin(), ds.end());
      cert.cycles.push_back(std::move(ds));
    }
  }
  std::sort(cert.cycles.begin(), cert.cycles.end());
  return cert;
}

std::string BlockCycleCertificate::str() const {
  std::ostringstream out;
  out << "blocks=" << block_count;
  if (!regular) out << " irregular";
  out << " cycles=";
  for (size_t i = 0; i < cycles.size(); ++i) {
    out << (i ? ";{" : "{");
    for (size_t j = 0; j < cycles[i].size(); ++j) {
      if (j) out << ',';
      out << cycles[i][j];
    }
    out << '}';
  }
  return out.str();
}

}  // namespace semmap
