#pragma once

#include <limits>
#include <string>

#include "json.hpp"

#include "tropcubics/incidence.hpp"
#include "tropcubics/schlaefli.hpp"

namespace tropcubics {

using json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit, otherwise as
// decimal strings. Rationals are always strings ("7" or "1/2").
inline json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

inline Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

inline json rat_to_json(const Rat& r) { return json(to_string(r)); }

inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rat(j.get<std::int64_t>());
}

inline json qvec_to_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

inline QVec qvec_from_json(const json& j) {
  QVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

inline json ivec_to_json(const IVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

inline IVec ivec_from_json(const json& j) {
  IVec out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

inline json pluecker_to_json(const Pluecker& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(rat_to_json(x));
  return out;
}

inline json occurrence_to_json(const MotifOccurrence& r) {
  json out;
  out["motif"] = r.motif;
  out["points"] = r.points;
  out["exits"] = r.exits;
  return out;
}

inline MotifOccurrence occurrence_from_json(const json& j) {
  MotifOccurrence r;
  r.motif = j.at("motif").get<std::string>();
  r.points = j.at("points").get<std::vector<int>>();
  auto ex = j.at("exits").get<std::vector<int>>();
  if (ex.size() != 4) throw domain_error("occurrence needs 4 exits");
  std::copy(ex.begin(), ex.end(), r.exits.begin());
  return r;
}

inline json wall_to_json(const IVec& w) {
  json out;
  out["coeffs"] = ivec_to_json(w);
  out["string"] = wall_string(w);
  return out;
}

inline IVec wall_from_json(const json& j) { return ivec_from_json(j.at("coeffs")); }

inline json piece_to_json(const Piece& p) {
  json span = json::array();
  span.push_back(rat_to_json(p.lo));
  span.push_back(p.hi ? rat_to_json(*p.hi) : json(nullptr));
  json out;
  out["piece"] = span;
  out["block"] = p.block;
  return out;
}

inline json certificate_to_json(const CoveringCertificate& c) {
  json out = json::array();
  for (const auto& p : c.pieces) out.push_back(piece_to_json(p));
  return out;
}

inline json incidence_to_json(const IncidenceResult& r) {
  static const char* names[5] = {"edge", "ray0", "ray1", "ray2", "ray3"};
  json out;
  out["contained"] = r.contained;
  json certs = json::array();
  for (std::size_t s = 0; s < r.certificates.size(); ++s) {
    json c;
    c["stretch"] = names[s];
    c["pieces"] = certificate_to_json(r.certificates[s]);
    certs.push_back(c);
  }
  out["certificates"] = certs;
  out["witness"] = r.witness_point ? qvec_to_json(*r.witness_point) : json(nullptr);
  return out;
}

inline std::string line_type_name(LineType t) {
  switch (t) {
    case LineType::t01_23: return "01|23";
    case LineType::t02_13: return "02|13";
    case LineType::t03_12: return "03|12";
    default: return "degenerate";
  }
}

inline json line_vertices_to_json(const LineVertices& lv) {
  json out;
  out["type"] = line_type_name(lv.type);
  out["first"] = qvec_to_json(lv.first);
  out["second"] = qvec_to_json(lv.second);
  out["first_rays"] = lv.first_rays;
  out["second_rays"] = lv.second_rays;
  return out;
}

inline json visibility_to_json(const VisibilityCone& v) {
  json out;
  out["classification"] = to_string(v.classification);
  json walls = json::array();
  for (const auto& w : v.walls) walls.push_back(wall_to_json(w));
  out["walls"] = walls;
  json eqs = json::array();
  for (const auto& e : v.equations) eqs.push_back(wall_to_json(e));
  out["equations"] = eqs;
  return out;
}

inline json cell_to_json(const SchlaefliCell& c) {
  json out;
  out["signs"] = c.signs;
  out["sample"] = qvec_to_json(c.sample);
  out["visible"] = c.visible;
  return out;
}

inline json genericity_to_json(const GenericityReport& g) {
  json out;
  out["generic"] = g.generic;
  json walls = json::array();
  for (const auto& w : g.vanishing_walls) walls.push_back(wall_to_json(w));
  out["vanishing_walls"] = walls;
  out["hardly_visible"] = g.hardly_visible;
  return out;
}

inline json facets_to_json(const Triangulation& T) {
  json out = json::array();
  for (const auto& c : T) out.push_back(c);
  return out;
}

inline Triangulation facets_from_json(const json& j) {
  Triangulation T;
  for (const auto& c : j) T.push_back(c.get<Cell>());
  return T;
}

}  // namespace tropcubics
