#pragma once

// JSON readers for the fixture formats: circuits, weighted arc diagrams,
// domination certificates, disked-tree models, grids. Parsing problems are
// reported with line/column positions by the CLI layer.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "renorm/circuit.hpp"
#include "renorm/domination.hpp"
#include "renorm/errors.hpp"
#include "renorm/gridwidth.hpp"
#include "renorm/hubbard.hpp"
#include "renorm/wad.hpp"

namespace renorm {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());  // nlohmann reports byte offsets on failure
}

// {"vertices":[...], "battery":["a","b"], "edges":[{"u":..,"v":..,"w":..}]}
inline Circuit circuit_from_json(const Json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  auto battery = j.at("battery");
  if (!battery.is_array() || battery.size() != 2)
    throw StructuralError("circuit json: battery must be a pair");
  std::vector<EdgeSpec> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                     e.at("w").get<double>()});
  return Circuit(std::move(vertices),
                 {battery[0].get<std::string>(), battery[1].get<std::string>()}, edges);
}

// {"surface":{"ends":[...],"proper":[...],"chi":-3},
//  "arcs":[{"id":..,"ends":[..,..],"w":..}], "crossings":[[..,..]]}
inline WadData wad_data_from_json(const Json& j) {
  SurfaceSignature sig;
  const auto& s = j.at("surface");
  sig.ends = s.at("ends").get<std::vector<std::string>>();
  for (const auto& p : s.at("proper")) sig.proper_ends.insert(p.get<std::string>());
  sig.euler_char = s.at("chi").get<int>();
  std::vector<Arc> arcs;
  std::map<std::string, double> weights;
  for (const auto& a : j.at("arcs")) {
    Arc arc;
    arc.id = a.at("id").get<std::string>();
    auto ends = a.at("ends");
    if (!ends.is_array() || ends.size() != 2)
      throw StructuralError("wad json: arc ends must be a pair");
    arc.ends = {ends[0].get<std::string>(), ends[1].get<std::string>()};
    arcs.push_back(arc);
    if (a.contains("w")) {
      double w = a.at("w").get<double>();
      if (w != 0.0) weights[arc.id] = w;
    }
  }
  std::vector<std::pair<std::string, std::string>> crossings;
  if (j.contains("crossings"))
    for (const auto& c : j.at("crossings")) {
      if (!c.is_array() || c.size() != 2)
        throw StructuralError("wad json: crossing must be a pair");
      crossings.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
    }
  auto system = std::make_shared<ArcSystem>(std::move(sig), std::move(arcs), std::move(crossings));
  return WadData{std::move(system), std::move(weights)};
}

// {"groups":[{"beta":..,"v":..,"segments":[["a1",w1],...],
//             "arrow":true,"via":[...]}]}
inline DominationCertificate certificate_from_json(const Json& j) {
  DominationCertificate cert;
  for (const auto& g : j.at("groups")) {
    CertificateGroup group;
    group.beta = g.at("beta").get<std::string>();
    group.v = g.at("v").get<double>();
    for (const auto& s : g.at("segments")) {
      if (!s.is_array() || s.size() != 2)
        throw StructuralError("certificate json: segment must be [arc, weight]");
      group.segments.push_back({s[0].get<std::string>(), s[1].get<double>()});
    }
    group.arrow_declared = g.value("arrow", true);
    if (g.contains("via")) group.via = g.at("via").get<std::vector<std::string>>();
    cert.groups.push_back(std::move(group));
  }
  return cert;
}

// {"p":2, "disks":[{"id":"D0","deg":2},...],
//  "tree_edges":[{"id":"g","from":"D0","to":"D1"}],
//  "substitution":{"g":[{"image":"g","disks_through":["E1"]},
//                       {"image":"g","disks_through":[]}]},
//  "level1_disks":{"E1":{"image":"D0"}},
//  "lift_table":{"b0":{"i":1,"lifts":["b1"],"disk":"D0"}}}
inline DiskedTreeModel model_from_json(const Json& j) {
  DiskedTreeModel m;
  m.period = j.at("p").get<int>();
  for (const auto& d : j.at("disks")) {
    DiskSpec spec;
    spec.id = d.at("id").get<std::string>();
    spec.deg = d.value("deg", 1);
    m.disks.push_back(spec);
  }
  for (const auto& e : j.at("tree_edges"))
    m.edges.push_back({e.at("id").get<std::string>(), e.at("from").get<std::string>(),
                       e.at("to").get<std::string>()});
  for (const auto& [edge, segments] : j.at("substitution").items()) {
    SubstitutionEntry entry;
    for (const auto& seg : segments) {
      entry.segment_images.push_back(seg.at("image").get<std::string>());
      for (const auto& d : seg.value("disks_through", Json::array()))
        entry.via.push_back(d.get<std::string>());
    }
    m.substitution[edge] = std::move(entry);
  }
  if (j.contains("level1_disks"))
    for (const auto& [token, spec] : j.at("level1_disks").items())
      m.level1_disks[token] = {spec.at("image").get<std::string>()};
  if (j.contains("lift_table"))
    for (const auto& [token, spec] : j.at("lift_table").items()) {
      LiftTableEntry entry;
      entry.intersections = spec.at("i").get<int>();
      entry.lifts = spec.at("lifts").get<std::vector<std::string>>();
      entry.disk = spec.value("disk", std::string());
      m.lift_table[token] = std::move(entry);
    }
  return m;
}

// {"m":10,"n":20,"bottom":[i0,i1],"top":[i0,i1],"obstacles":[[i,j],...]}
inline GridQuad quad_from_json(const Json& j) {
  GridQuad q;
  q.m = j.at("m").get<int>();
  q.n = j.at("n").get<int>();
  if (j.contains("bottom")) {
    q.lo_begin = j.at("bottom").at(0).get<int>();
    q.lo_end = j.at("bottom").at(1).get<int>();
  }
  if (j.contains("top")) {
    q.hi_begin = j.at("top").at(0).get<int>();
    q.hi_end = j.at("top").at(1).get<int>();
  }
  if (j.contains("obstacles"))
    for (const auto& o : j.at("obstacles")) q.obstacles.insert({o.at(0).get<int>(), o.at(1).get<int>()});
  return q;
}

// {"m":12,"n":4}
inline GridAnnulus annulus_from_json(const Json& j) {
  GridAnnulus a;
  a.m = j.at("m").get<int>();
  a.n = j.at("n").get<int>();
  return a;
}

// Aligned WAD over a model's tree edges: {"weights":{"g":2.5,...}}
inline Wad aligned_wad_from_json(const DiskedTreeModel& m, const Json& j) {
  std::map<std::string, double> w;
  for (const auto& [edge, weight] : j.at("weights").items()) w[edge] = weight.get<double>();
  return Wad(tree_arc_system(m), std::move(w));
}

}  // namespace renorm
