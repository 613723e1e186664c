#pragma once

#include <string>

#include "semmap/map.hpp"

namespace semmap {

// JSON map format: {"name": <optional string>, "faces": [[v,...],...]}.
std::string map_to_json(const PolyhedralMap& m, int indent = -1);
PolyhedralMap map_from_json(const std::string& text);

PolyhedralMap load_map_file(const std::string& path);
void save_map_file(const PolyhedralMap& m, const std::string& path);

}  // namespace semmap
