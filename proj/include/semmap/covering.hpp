#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semmap/map.hpp"
#include "semmap/perm.hpp"
#include "semmap/symmetry.hpp"

namespace semmap {

// A simple closed walk in the edge graph of a map, candidate cutting locus.
struct CycleSpec {
  std::vector<Vertex> vertices;

  // Validates: r >= 3, distinct vertices, consecutive pairs are edges.
  static CycleSpec of(const PolyhedralMap& m, std::vector<Vertex> verts);
  int length() const { return static_cast<int>(vertices.size()); }
  std::string str() const;
};

// A map cut open along a cycle: two aligned boundary cycles A(u_1..u_r) and
// B(w_1..w_r), where u_i and w_i are the two copies of cycle vertex v_i.
// Boundary edges lie in exactly one face, interior edges in two.
struct BorderedMap {
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> boundary_a;  // keeps the original labels
  std::vector<Vertex> boundary_b;  // fresh labels

  std::vector<Vertex> vertex_labels() const;  // ascending
  int vertex_count() const;
  int face_count() const { return static_cast<int>(faces.size()); }
  // (interior edge count, boundary edge count)
  std::pair<int, int> edge_counts() const;
};

// Cuts the map open along the cycle. Throws MapError when the cycle is
// inadmissible: inconsistent side propagation (one-sided cycle), a broken
// arc partition, a separating cycle (disconnected result), or any other
// violation of the bordered-complex invariants.
BorderedMap cut_along(const PolyhedralMap& m, const CycleSpec& cycle);

// All simple cycles of length <= max_len that cut successfully, up to
// rotation/reflection of the cycle, sorted.
std::vector<CycleSpec> admissible_cycles(const PolyhedralMap& m, int max_len);

struct CoverReport {
  PolyhedralMap cover;
  int m;
  VertexPermutation deck_rotation;          // copy shift, order m
  std::optional<GroupId> predicted_group;   // set for m >= 2
  std::optional<GroupId> verified_group;    // filled on request
};

// m disjoint copies of the cut piece glued cyclically (B_i to A_{i+1},
// index-aligned). Cover vertices are labeled 0..m*n-1: normalized original
// vertex v in copy t becomes v + t*n.
CoverReport build_cover(const PolyhedralMap& m, const CycleSpec& cycle,
                        int fold);

// An involution of the base map exchanging the two sides of the cutting
// cycle: its action on dual cycles negates the crossing number with the
// cycle, so its lifts to any cyclic cover invert the deck rotation. Acts on
// the normalized vertex indices of the map; nullopt when absent.
std::optional<VertexPermutation> side_swap_symmetry(const PolyhedralMap& m,
                                                    const CycleSpec& cycle);

// dihedral(m) when a side swap exists, else cyclic(m). Requires m >= 2.
GroupId predict_cover_group(const PolyhedralMap& m, const CycleSpec& cycle,
                            int fold);

}  // namespace semmap
