#pragma once

#include <json.hpp>

#include "tiler/cyclic_order.hpp"
#include "tiler/gchamber.hpp"
#include "tiler/hypersimplex.hpp"
#include "tiler/parke_taylor.hpp"
#include "tiler/subdivision.hpp"
#include "tiler/tiling.hpp"

namespace tiler {

// JSON label encoding: the distinguished label * is written as 0.
inline nlohmann::json label_to_json(Label v) { return v == kStar ? 0 : v; }
inline Label label_from_json(const nlohmann::json& j) {
  Label v = j.get<Label>();
  return v == 0 ? kStar : v;
}

inline nlohmann::json labels_to_json(const std::vector<Label>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (Label v : vs) a.push_back(label_to_json(v));
  return a;
}

inline std::vector<Label> labels_from_json(const nlohmann::json& j) {
  std::vector<Label> vs;
  for (const auto& e : j) vs.push_back(label_from_json(e));
  return vs;
}

inline nlohmann::json to_json(const PartialCyclicOrder& p) {
  nlohmann::json j;
  j["ground"] = labels_to_json(p.ground());
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : p.canonical_triples())
    ts.push_back(labels_to_json({t[0], t[1], t[2]}));
  j["triples"] = ts;
  return j;
}

inline PartialCyclicOrder partial_order_from_json(const nlohmann::json& j) {
  PartialCyclicOrder p{labels_from_json(j.at("ground"))};
  for (const auto& t : j.at("triples")) {
    auto v = labels_from_json(t);
    if (v.size() != 3) throw std::invalid_argument("triple must have 3 labels");
    if (!p.contains(v[0], v[1], v[2])) p.add_triple(v[0], v[1], v[2]);
  }
  p.close();
  return p;
}

inline nlohmann::json to_json(const TotalCyclicOrder& t) {
  return nlohmann::json{{"cycle", labels_to_json(t.cycle())}};
}

inline nlohmann::json to_json(const Subdivision& s) {
  nlohmann::json j;
  j["n"] = s.n();
  if (s.ground != ground_interval(s.n())) j["ground"] = labels_to_json(s.ground);
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : s.polygons)
    ps.push_back({{"color", color_name(p.color)},
                  {"vertices", labels_to_json(p.vertices)}});
  j["polygons"] = ps;
  return j;
}

inline Subdivision subdivision_from_json(const nlohmann::json& j) {
  Subdivision s;
  if (j.contains("ground"))
    s.ground = labels_from_json(j.at("ground"));
  else
    s.ground = ground_interval(j.at("n").get<int>());
  for (const auto& p : j.at("polygons")) {
    Polygon poly;
    poly.color = color_from_name(p.at("color").get<std::string>());
    poly.vertices = labels_from_json(p.at("vertices"));
    s.polygons.push_back(std::move(poly));
  }
  canonicalize(s);
  return s;
}

inline nlohmann::json to_json(const WSimplex& w) {
  nlohmann::json j;
  j["w"] = w.w;
  j["k"] = w.k;
  j["I"] = w.I;
  return j;
}

inline nlohmann::json to_json(const TilePolytope& p) {
  nlohmann::json j;
  j["n"] = p.n;
  if (!p.projected) j["k"] = p.k;
  j["projected"] = p.projected;
  nlohmann::json bs = nlohmann::json::array();
  for (const auto& b : p.bounds)
    bs.push_back({{"src", label_to_json(b.src)},
                  {"dst", label_to_json(b.dst)},
                  {"lo", b.lo},
                  {"hi", b.hi},
                  {"facet_lower", b.facet_lower}});
  j["bounds"] = bs;
  return j;
}

inline nlohmann::json to_json(const Tiling& t) {
  nlohmann::json j;
  j["k"] = t.k;
  j["n"] = t.n;
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& tile : t.tiles) tiles.push_back(to_json(tile.subdivision));
  j["tiles"] = tiles;
  return j;
}

// Tiling files: {"k":..,"n":..,"tiles":[subdivision,...]}.
inline std::pair<std::vector<Subdivision>, std::pair<int, int>>
tiling_file_from_json(const nlohmann::json& j) {
  std::vector<Subdivision> tiles;
  for (const auto& t : j.at("tiles")) tiles.push_back(subdivision_from_json(t));
  return {tiles, {j.at("k").get<int>(), j.at("n").get<int>()}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["seed"] = r.seed;
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    nlohmann::json point = nlohmann::json::array();
    for (const auto& [lab, v] : t.point)
      point.push_back({label_to_json(lab), rational_to_string(v)});
    trials.push_back({{"point", point},
                      {"residual", rational_to_string(t.residual)}});
  }
  j["trials"] = trials;
  j["pass"] = r.pass;
  return j;
}

inline nlohmann::json to_json(const ChamberMatrix& m) {
  nlohmann::json top = nlohmann::json::array();
  nlohmann::json bottom = nlohmann::json::array();
  for (const auto& v : m.top) top.push_back(rational_to_string(v));
  for (const auto& v : m.bottom) bottom.push_back(rational_to_string(v));
  return nlohmann::json{{"rows", {top, bottom}}};
}

}  // namespace tiler
