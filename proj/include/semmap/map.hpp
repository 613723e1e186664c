#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semmap/error.hpp"
#include "semmap/vertex_type.hpp"

namespace semmap {

using Vertex = long long;

// Polyhedral map on a closed surface, given by its faces as cyclic vertex
// sequences. Construction validates the full set of polyhedrality
// invariants (edge in exactly two faces, face pairs meeting in at most an
// edge, a single face-cycle at every vertex, connected simple edge graph)
// and derives the rotation system. Instances are immutable; all queries are
// read-only.
//
// Vertex labels are arbitrary non-negative integers. Internally vertices
// are normalized to indices 0..n-1 in ascending label order; the algorithms
// below work in index space and the public accessors translate back.
class PolyhedralMap {
public:
  static PolyhedralMap from_faces(std::vector<std::vector<Vertex>> faces,
                                  std::string name = {});

  const std::string& name() const { return name_; }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  long long euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  // Faces with the user labels, exactly as given at construction.
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  // Ascending user labels; index i holds the label of normalized vertex i.
  const std::vector<Vertex>& vertex_labels() const { return labels_; }

  VertexType face_cycle_type(Vertex v) const;
  std::optional<VertexType> semi_equivelar_type() const;
  bool is_orientable() const;
  // Boundary cycle of the closed star of v, in rotation order (user labels).
  std::vector<Vertex> link_cycle(Vertex v) const;

  // A copy with vertices renamed via the (total) mapping.
  PolyhedralMap relabeled(
      const std::unordered_map<Vertex, Vertex>& mapping) const;
  // A copy with every face cycle reversed.
  PolyhedralMap mirrored() const;

  // --- normalized view, used by the algorithm modules ---

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::vector<int>>& ifaces() const { return ifaces_; }
  // Faces around vertex vi in rotation order.
  const std::vector<int>& rot_faces(int vi) const { return rot_faces_[vi]; }
  // rot_gaps(vi)[k] = neighbor across the edge shared by rotation faces k
  // and k+1 (cyclically).
  const std::vector<int>& rot_gaps(int vi) const { return rot_gaps_[vi]; }
  int degree(int vi) const { return static_cast<int>(rot_faces_[vi].size()); }

  int edge_id(int u, int v) const;           // -1 when absent
  const std::array<int, 2>& edge_faces(int eid) const { return edge_faces_[eid]; }
  std::pair<int, int> edge_ends(int eid) const { return edges_[eid]; }

  Vertex label_of(int vi) const { return labels_[vi]; }
  int index_of(Vertex v) const;
  bool has_vertex(Vertex v) const { return index_to_.count(v) > 0; }

  // Whether the cyclic sequence (up to rotation/reflection) is a face.
  bool has_iface(const std::vector<int>& cycle) const;
  // Index of that face, -1 when absent.
  int iface_index(const std::vector<int>& cycle) const;

private:
  PolyhedralMap() = default;
  void build_and_validate();

  std::string name_;
  std::vector<std::vector<Vertex>> faces_;   // user labels, as given
  std::vector<Vertex> labels_;               // index -> label (ascending)
  std::unordered_map<Vertex, int> index_to_; // label -> index
  std::vector<std::vector<int>> ifaces_;     // normalized faces
  std::vector<std::pair<int, int>> edges_;   // (u,v), u < v
  std::vector<std::array<int, 2>> edge_faces_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<std::vector<int>> rot_faces_;
  std::vector<std::vector<int>> rot_gaps_;
  std::unordered_map<std::string, int> face_keys_;
};

// Rendering of a face in the usual [u1,...,un] notation.
std::string face_str(const std::vector<Vertex>& face);

}  // namespace semmap
