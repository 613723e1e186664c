#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semmap/map.hpp"
#include "semmap/perm.hpp"

namespace semmap {

// Full automorphism group of a map, elements stored explicitly as vertex
// permutations over the normalized index space, sorted.
struct AutGroup {
  std::vector<VertexPermutation> elements;
  std::vector<int> generators;  // indices into elements, greedy generating set
  long long order() const { return static_cast<long long>(elements.size()); }
};

// Abstract identification: trivial, cyclic Z_m, dihedral D_m (order 2m, with
// D_1 reported as Z_2 and D_2 = Klein four reported as dihedral), or other.
struct GroupId {
  enum class Tag { trivial, cyclic, dihedral, other };
  Tag tag = Tag::trivial;
  int m = 0;
  long long order = 1;

  std::string str() const;
  bool operator==(const GroupId& o) const {
    return tag == o.tag && m == o.m && order == o.order;
  }
  bool operator!=(const GroupId& o) const { return !(*this == o); }
};

GroupId group_trivial();
GroupId group_cyclic(int m);
GroupId group_dihedral(int m);

// An automorphism of a polyhedral map is determined by the image of a single
// flag (incident vertex-edge-face triple); every candidate image of a fixed
// base flag is propagated across the flag graph and kept when consistent.
AutGroup automorphism_group(const PolyhedralMap& m);

GroupId identify_group(const AutGroup& g);
// Same identification on a bare closed permutation set (must contain the
// identity and be closed under composition and inverse).
GroupId identify_permutation_group(const std::vector<VertexPermutation>& elements);

// Vertex bijection (user labels) carrying faces of a to faces of b,
// reflections allowed; nullopt when the maps are not isomorphic.
std::optional<std::unordered_map<Vertex, Vertex>> are_isomorphic(
    const PolyhedralMap& a, const PolyhedralMap& b);

// Equal certificates <=> isomorphic maps; invariant under relabeling and
// reflection. Breadth-first relabeling from every flag, lexicographically
// least face-list encoding kept.
std::string canonical_certificate(const PolyhedralMap& m);

std::vector<std::vector<Vertex>> vertex_orbits(const PolyhedralMap& m,
                                               const AutGroup& g);
bool is_vertex_transitive(const PolyhedralMap& m);

// Flag counts: 4 * f_1. Exposed for the orbit-stabilizer checks in tests.
long long flag_count(const PolyhedralMap& m);

}  // namespace semmap
