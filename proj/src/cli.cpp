#include "semmap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semmap/catalog.hpp"
#include "semmap/census.hpp"
#include "semmap/classify.hpp"
#include "semmap/covering.hpp"
#include "semmap/json_io.hpp"
#include "semmap/symmetry.hpp"

namespace semmap {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cert_digest(const std::string& cert) {
  std::ostringstream out;
  out << std::hex << fnv1a(cert);
  return out.str();
}

std::vector<Vertex> parse_cycle_arg(const std::string& text) {
  std::vector<Vertex> verts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      verts.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw MapError("bad cycle vertex '" + item + "'");
    }
  }
  return verts;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json map_summary_json(const PolyhedralMap& m) {
  json j;
  j["vertices"] = m.vertex_count();
  j["edges"] = m.edge_count();
  j["faces"] = m.face_count();
  j["euler_characteristic"] = m.euler_characteristic();
  auto t = m.semi_equivelar_type();
  j["type"] = t ? json(t->str()) : json(nullptr);
  j["orientable"] = m.is_orientable();
  return j;
}

json census_entry_json(const TypeCensusEntry& e) {
  json j;
  j["n"] = e.n;
  j["type"] = e.type.str();
  json fv = json::object();
  for (auto [s, x] : e.face_vector) fv[std::to_string(s)] = x;
  j["face_vector"] = fv;
  if (e.rejection != Reject::none) j["rejected"] = reject_str(e.rejection);
  return j;
}

struct Options {
  bool json_out = false;
  std::string file, file_b;
  std::string type_str;
  long long chi = -2;
  long long min_vertices = 12;
  long long min_faces = 3;
  bool no_paper_exclusions = false;
  bool patch_bound = false;
  bool rejected = false;
  std::string cycle_str;
  int fold = 2;
  bool with_aut = false;
  bool elements = false;
  std::string out_file;
  std::string emit_dir;
  bool anchored = false;
  bool generic = false;
  bool catalog_convention = false;
  long long budget = 100000000;
  int max_len = 3;
  int gonality = 10;
  std::string catalog_name;
  std::string catalog_dir;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"semi-equivelar maps on surfaces: validation, census, "
               "classification, coverings and symmetry groups"};
  app.require_subcommand(0, 1);
  Options o;
  bool no_banner = false;
  app.add_flag("--no-banner", no_banner, "suppress any header output");

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json_out, "machine-readable output");
  };

  auto* c_validate = app.add_subcommand("validate", "validate a map file");
  c_validate->add_option("file", o.file, "map JSON file")->required();
  add_json(c_validate);

  auto* c_type = app.add_subcommand("type", "vertex type and invariants");
  c_type->add_option("file", o.file)->required();
  add_json(c_type);

  auto* c_aut = app.add_subcommand("aut", "automorphism group");
  c_aut->add_option("file", o.file)->required();
  c_aut->add_flag("--elements", o.elements, "list all elements");
  add_json(c_aut);

  auto* c_iso = app.add_subcommand("iso", "isomorphism test");
  c_iso->add_option("a", o.file)->required();
  c_iso->add_option("b", o.file_b)->required();
  add_json(c_iso);

  auto* c_orbits = app.add_subcommand("orbits", "vertex orbits");
  c_orbits->add_option("file", o.file)->required();
  add_json(c_orbits);

  auto* c_enum = app.add_subcommand("enumerate", "census of admissible types");
  c_enum->add_option("--chi", o.chi, "Euler characteristic (< 0)")->required();
  c_enum->add_option("--min-vertices", o.min_vertices, "vertex floor");
  c_enum->add_option("--min-faces", o.min_faces, "face count floor");
  c_enum->add_flag("--no-paper-exclusions", o.no_paper_exclusions);
  c_enum->add_flag("--patch-bound", o.patch_bound,
                   "also apply the patch-counting bound");
  c_enum->add_flag("--rejected", o.rejected, "include rejected entries");
  add_json(c_enum);

  auto* c_cycles = app.add_subcommand("cycles", "admissible cutting cycles");
  c_cycles->add_option("file", o.file)->required();
  c_cycles->add_option("--max-len", o.max_len, "maximum cycle length")
      ->required();
  add_json(c_cycles);

  auto* c_cover = app.add_subcommand("cover", "cyclic covering map");
  c_cover->add_option("file", o.file)->required();
  c_cover->add_option("--cycle", o.cycle_str, "cutting cycle, e.g. 0,6,10")
      ->required();
  c_cover->add_option("--m", o.fold, "fold count")->required();
  c_cover->add_flag("--aut", o.with_aut, "verify the group by brute force");
  c_cover->add_option("--out", o.out_file, "write the cover map to a file");
  add_json(c_cover);

  auto* c_classify = app.add_subcommand(
      "classify", "all maps of a type up to isomorphism");
  c_classify->add_option("--type", o.type_str, "vertex type, e.g. [3^4,10]")
      ->required();
  c_classify->add_option("--chi", o.chi)->required();
  auto* fa = c_classify->add_flag("--anchored", o.anchored);
  c_classify->add_flag("--generic", o.generic)->excludes(fa);
  c_classify->add_option("--budget", o.budget, "node budget");
  c_classify->add_option("--emit-dir", o.emit_dir,
                         "write each representative as a JSON map file");
  c_classify->add_flag("--catalog-convention", o.catalog_convention,
                       "relabel onto the catalog anchor convention");
  add_json(c_classify);

  auto* c_blocks = app.add_subcommand("blocks", "blocks and their cycles");
  c_blocks->add_option("file", o.file)->required();
  c_blocks->add_option("--gonality", o.gonality, "anchor face size")
      ->required();
  add_json(c_blocks);

  auto* c_catalog = app.add_subcommand("catalog", "bundled fixture maps");
  c_catalog->add_option("name", o.catalog_name, "entry to dump");
  c_catalog->add_option("--dir", o.catalog_dir, "catalog directory");
  add_json(c_catalog);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n" + app.help()};
  }
  if (app.get_subcommands().empty()) return {2, app.help()};

  std::ostringstream out;
  json payload;
  try {
    if (app.got_subcommand(c_validate)) {
      PolyhedralMap m = load_map_file(o.file);
      payload = map_summary_json(m);
      out << "valid map: " << m.vertex_count() << " vertices, "
          << m.edge_count() << " edges, " << m.face_count() << " faces\n";
    } else if (app.got_subcommand(c_type)) {
      PolyhedralMap m = load_map_file(o.file);
      payload = map_summary_json(m);
      auto t = m.semi_equivelar_type();
      out << "type: " << (t ? t->str() : "none (not semi-equivelar)") << "\n"
          << "vertices: " << m.vertex_count() << "\n"
          << "edges: " << m.edge_count() << "\n"
          << "faces: " << m.face_count() << "\n"
          << "euler_characteristic: " << m.euler_characteristic() << "\n"
          << "orientable: " << yesno(m.is_orientable()) << "\n";
    } else if (app.got_subcommand(c_aut)) {
      PolyhedralMap m = load_map_file(o.file);
      AutGroup g = automorphism_group(m);
      GroupId id = identify_group(g);
      auto orbits = vertex_orbits(m, g);
      out << "aut_order: " << g.order() << "\n"
          << "group: " << id.str() << "\n"
          << "vertex_orbits: " << orbits.size() << "\n"
          << "vertex_transitive: " << yesno(orbits.size() == 1) << "\n";
      payload["aut_order"] = g.order();
      payload["group"] = id.str();
      payload["vertex_orbits"] = orbits.size();
      payload["vertex_transitive"] = orbits.size() == 1;
      if (o.elements) {
        payload["elements"] = json::array();
        for (const auto& e : g.elements) {
          std::string cs = e.cycle_string(m.vertex_labels());
          out << "  " << cs << "\n";
          payload["elements"].push_back(cs);
        }
      }
    } else if (app.got_subcommand(c_iso)) {
      PolyhedralMap a = load_map_file(o.file);
      PolyhedralMap b = load_map_file(o.file_b);
      auto bij = are_isomorphic(a, b);
      if (!bij) {
        return {1, o.json_out ? std::string("{\"isomorphic\":false}\n")
                              : std::string("non-isomorphic\n")};
      }
      out << "isomorphic\n";
      payload["isomorphic"] = true;
      json jm = json::object();
      std::vector<Vertex> keys;
      for (auto& [x, y] : *bij) keys.push_back(x);
      std::sort(keys.begin(), keys.end());
      for (Vertex x : keys) {
        out << "  " << x << " -> " << bij->at(x) << "\n";
        jm[std::to_string(x)] = bij->at(x);
      }
      payload["bijection"] = jm;
    } else if (app.got_subcommand(c_orbits)) {
      PolyhedralMap m = load_map_file(o.file);
      AutGroup g = automorphism_group(m);
      auto orbits = vertex_orbits(m, g);
      out << "orbits: " << orbits.size() << "\n";
      payload["orbits"] = json::array();
      for (const auto& orb : orbits) {
        out << "  {";
        for (size_t i = 0; i < orb.size(); ++i)
          out << (i ? "," : "") << orb[i];
        out << "}\n";
        payload["orbits"].push_back(orb);
      }
      payload["vertex_transitive"] = orbits.size() == 1;
    } else if (app.got_subcommand(c_enum)) {
      EnumerationParams p;
      p.chi = o.chi;
      p.min_vertices = o.min_vertices;
      p.min_face_count = o.min_faces;
      p.apply_paper_exclusions = !o.no_paper_exclusions;
      p.apply_patch_bound = o.patch_bound;
      p.keep_rejected = o.rejected;
      CensusResult census = enumerate_types(p);
      payload["chi"] = p.chi;
      payload["accepted"] = json::array();
      for (const auto& e : census.accepted) {
        out << e.n << "\t" << e.type.str() << "\t";
        bool first = true;
        for (auto [s, x] : e.face_vector) {
          out << (first ? "" : ",") << s << ":" << x;
          first = false;
        }
        out << "\n";
        payload["accepted"].push_back(census_entry_json(e));
      }
      out << census.accepted.size() << " types\n";
      if (o.rejected) {
        payload["rejected"] = json::array();
        for (const auto& e : census.rejected) {
          out << "rejected\t" << e.n << "\t" << e.type.str() << "\t"
              << reject_str(e.rejection) << "\n";
          payload["rejected"].push_back(census_entry_json(e));
        }
      }
    } else if (app.got_subcommand(c_cycles)) {
      PolyhedralMap m = load_map_file(o.file);
      auto cycles = admissible_cycles(m, o.max_len);
      payload["cycles"] = json::array();
      for (const auto& c : cycles) {
        out << c.str() << "\n";
        payload["cycles"].push_back(c.vertices);
      }
      out << cycles.size() << " admissible cycles\n";
    } else if (app.got_subcommand(c_cover)) {
      PolyhedralMap m = load_map_file(o.file);
      CycleSpec cycle = CycleSpec::of(m, parse_cycle_arg(o.cycle_str));
      CoverReport rep = build_cover(m, cycle, o.fold);
      payload["m"] = rep.m;
      payload["cover"] = json::parse(map_to_json(rep.cover));
      payload["deck_rotation"] =
          rep.deck_rotation.cycle_string(rep.cover.vertex_labels());
      out << "cover: " << rep.cover.vertex_count() << " vertices, "
          << rep.cover.edge_count() << " edges, " << rep.cover.face_count()
          << " faces\n";
      out << "euler_characteristic: " << rep.cover.euler_characteristic()
          << "\n";
      auto t = rep.cover.semi_equivelar_type();
      out << "type: " << (t ? t->str() : "none") << "\n";
      out << "orientable: " << yesno(rep.cover.is_orientable()) << "\n";
      out << "deck_rotation: "
          << rep.deck_rotation.cycle_string(rep.cover.vertex_labels()) << "\n";
      if (rep.predicted_group) {
        out << "predicted_group: " << rep.predicted_group->str() << "\n";
        payload["predicted_group"] = rep.predicted_group->str();
      }
      if (o.with_aut) {
        AutGroup g = automorphism_group(rep.cover);
        GroupId id = identify_group(g);
        rep.verified_group = id;
        out << "aut_order: " << g.order() << "\n";
        out << "verified_group: " << id.str() << "\n";
        payload["aut_order"] = g.order();
        payload["verified_group"] = id.str();
      }
      if (!o.out_file.empty()) {
        save_map_file(rep.cover, o.out_file);
        out << "written: " << o.out_file << "\n";
      }
    } else if (app.got_subcommand(c_classify)) {
      VertexType type = VertexType::parse(o.type_str);
      ClassifyOptions copts;
      copts.node_budget = o.budget;
      if (o.anchored) copts.strategy = ClassifyOptions::Strategy::anchored;
      if (o.generic) copts.strategy = ClassifyOptions::Strategy::generic;
      ClassifyResult res = classify_type(type, o.chi, copts);
      payload["type"] = type.str();
      payload["chi"] = o.chi;
      payload["count"] = res.maps.size();
      payload["maps"] = json::array();
      out << "maps: " << res.maps.size() << "\n";
      std::string slug = type.str();
      for (char& c : slug)
        if (c == '[' || c == ']' || c == '^' || c == ',') c = '_';
      for (size_t i = 0; i < res.maps.size(); ++i) {
        PolyhedralMap rep = o.catalog_convention
                                ? to_anchor_convention(res.maps[i])
                                : res.maps[i];
        std::string cert = cert_digest(canonical_certificate(rep));
        out << "  map " << i + 1 << ": certificate " << cert << "\n";
        json jm;
        jm["certificate"] = cert;
        if (!o.emit_dir.empty()) {
          std::string path = o.emit_dir + "/" + slug + "_" +
                             std::to_string(i + 1) + ".json";
          PolyhedralMap named = PolyhedralMap::from_faces(
              rep.faces(), slug + "_" + std::to_string(i + 1));
          save_map_file(named, path);
          jm["file"] = path;
          out << "  written: " << path << "\n";
        }
        payload["maps"].push_back(jm);
      }
    } else if (app.got_subcommand(c_blocks)) {
      PolyhedralMap m = load_map_file(o.file);
      auto bs = blocks(m, o.gonality);
      payload["blocks"] = json::array();
      for (const auto& b : bs) {
        out << b.str() << "\n";
        payload["blocks"].push_back(b.str());
      }
      out << bs.size() << " blocks\n";
      if (!bs.empty() && o.gonality % 2 == 0) {
        auto cert = block_certificate(m, o.gonality);
        out << "certificate: " << cert.str() << "\n";
        payload["certificate"] = cert.str();
      }
    } else if (app.got_subcommand(c_catalog)) {
      std::string dir =
          o.catalog_dir.empty() ? Catalog::default_dir() : o.catalog_dir;
      Catalog cat = Catalog::open(dir);
      if (o.catalog_name.empty()) {
        payload["entries"] = json::array();
        for (const auto& e : cat.entries()) {
          out << e.name << "\t" << e.source << "\t"
              << (e.type ? *e.type : "-") << "\n";
          json je;
          je["name"] = e.name;
          je["source"] = e.source;
          if (e.type) je["type"] = *e.type;
          payload["entries"].push_back(je);
        }
      } else {
        const CatalogEntry& e = cat.get(o.catalog_name);
        out << map_to_json(e.map, 1) << "\n";
        payload = json::parse(map_to_json(e.map));
      }
    }
  } catch (const MapError& e) {
    std::string msg = std::string("error: ") + e.what() + "\n";
    if (o.json_out) {
      json j;
      j["error"] = e.what();
      return {1, j.dump(1) + "\n"};
    }
    return {1, msg};
  }

  if (o.json_out) return {0, payload.dump(1) + "\n"};
  return {0, out.str()};
}

}  // namespace semmap
