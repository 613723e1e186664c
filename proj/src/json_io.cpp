#include "semmap/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semmap {

using nlohmann::json;

std::string map_to_json(const PolyhedralMap& m, int indent) {
  json doc;
  if (!m.name().empty()) doc["name"] = m.name();
  doc["faces"] = json::array();
  for (const auto& f : m.faces()) doc["faces"].push_back(f);
  return doc.dump(indent);
}

PolyhedralMap map_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MapError(std::string("malformed JSON document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("faces") || !doc["faces"].is_array())
    throw MapError("map document must be an object with a \"faces\" array");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw MapError("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<std::vector<Vertex>> faces;
  for (const auto& jf : doc["faces"]) {
    if (!jf.is_array()) throw MapError("each face must be an array of vertices");
    std::vector<Vertex> f;
    for (const auto& jv : jf) {
      if (!jv.is_number_integer() && !jv.is_number_unsigned())
        throw MapError("vertices must be integers");
      f.push_back(jv.get<Vertex>());
    }
    faces.push_back(std::move(f));
  }
  return PolyhedralMap::from_faces(std::move(faces), std::move(name));
}

PolyhedralMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapError("cannot open map file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return map_from_json(buf.str());
}

void save_map_file(const PolyhedralMap& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MapError("cannot write map file: " + path);
  out << map_to_json(m, 1) << "\n";
}

}  // namespace semmap
