#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semmap/map.hpp"

namespace semmap {

// Named, versioned test fixtures: one JSON map file per entry plus a
// manifest carrying provenance and the expected properties, which are
// revalidated on load.
struct CatalogEntry {
  std::string name;
  std::string file;
  PolyhedralMap map;
  std::string source;   // "reference" or "generated"
  std::string command;  // regeneration command for generated entries
  std::optional<std::string> type;
  std::optional<long long> vertices;
  std::optional<long long> chi;
  std::optional<bool> orientable;
};

class Catalog {
public:
  static Catalog open(const std::string& dir);
  static std::string default_dir();

  const CatalogEntry& get(const std::string& name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

private:
  std::vector<CatalogEntry> entries_;  // manifest order
};

// Relabels a map whose unique-maximal-size faces partition the vertex set
// (three of them) onto the block label convention used by the catalog
// fixtures: the anchors become [1..s], [2s+1..3s] and [s+1..2s], and the
// least face-list encoding over all such relabelings is kept.
PolyhedralMap to_anchor_convention(const PolyhedralMap& m);

}  // namespace semmap
