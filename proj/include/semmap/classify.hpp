#pragma once

#include <array>
#include <string>
#include <vector>

#include "semmap/map.hpp"
#include "semmap/vertex_type.hpp"

namespace semmap {

struct ClassifyOptions {
  enum class Strategy { automatic, generic, anchored };
  Strategy strategy = Strategy::automatic;
  long long node_budget = 100000000;
};

struct ClassifyResult {
  std::vector<PolyhedralMap> maps;  // duplicate-free, sorted by certificate
  bool complete = true;             // false when the node budget ran out
  long long nodes = 0;
  long long completions = 0;        // labeled completions before dedup
};

// All semi-equivelar maps of the given type on the surface with the given
// Euler characteristic, up to isomorphism. Canonical-seed backtracking over
// face extensions at the most-constrained open edge; isomorph rejection by
// canonical certificate at completion. The anchored strategy (all faces of
// the unique maximal size placed first; they partition the vertex set) kicks
// in automatically when applicable.
ClassifyResult classify_type(const VertexType& type, long long chi,
                             const ClassifyOptions& opts = {});

// Two triangles [a,b,c],[b,c,d] whose outer edges [a,b] and [c,d] each lie
// on an anchor face of the given gonality; the anchor meets the block in
// exactly that edge. Deduplicated under [a,b,c|d] ~ [d,c,b|a].
struct Block {
  std::array<Vertex, 4> v{};  // a, b, c, d
  int anchor_ab = -1;         // face index of the anchor at [a,b]
  int anchor_cd = -1;         // face index of the anchor at [c,d]
  std::string str() const;
};

std::vector<Block> blocks(const PolyhedralMap& m, int gonality);

// Isomorphism invariant built from the cycles that alternate blocks and
// anchor faces (consecutive blocks attached to the shared anchor along
// antipodal edges), with the distance-between-blocks values of consecutive
// blocks. Requires even gonality.
struct BlockCycleCertificate {
  std::vector<std::vector<long long>> cycles;  // sorted DBB multiset per cycle
  long long block_count = 0;
  bool regular = true;  // every block had one antipodal partner per side

  std::string str() const;
  bool operator==(const BlockCycleCertificate& o) const {
    return cycles == o.cycles && block_count == o.block_count &&
           regular == o.regular;
  }
  bool operator!=(const BlockCycleCertificate& o) const { return !(*this == o); }
};

BlockCycleCertificate block_certificate(const PolyhedralMap& m, int gonality);

}  // namespace semmap
