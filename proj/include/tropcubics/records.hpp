#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tropcubics/io.hpp"

namespace tropcubics {

struct OccurrenceEntry {
  MotifOccurrence occ;
  Visibility classification = Visibility::global;
  std::vector<IVec> walls;
  std::vector<IVec> equations;
};

struct MotifSummary {
  std::vector<std::pair<std::string, std::size_t>> counts;  // catalog order
  std::size_t total = 0;
  std::vector<OccurrenceEntry> entries;
};

struct TriangulationRecord {
  long long id = 0;
  Triangulation facets;
  std::array<Int, 20> gkz{};
  std::array<std::size_t, 4> b_vec{};
  std::size_t orbit_size = 0;
  std::string canon_key;
  Int altshuler = 0;
  IVec interior_point;
  std::size_t secondary_facet_count = 0;
  MotifSummary motifs;
};

// Lex-min GKZ representative within the coordinate-symmetry orbit,
// ties broken by the facet list itself.
inline Triangulation canonical_representative(const Triangulation& T) {
  bool have = false;
  std::array<Int, 20> best_gkz{};
  Triangulation best;
  for (const auto& p : all_perm4()) {
    Triangulation img = apply_perm(p, T);
    std::array<Int, 20> g = gkz_vector(img);
    if (!have || g < best_gkz || (g == best_gkz && img < best)) {
      have = true;
      best_gkz = g;
      best = std::move(img);
    }
  }
  return best;
}

// Populates every derived field from the facet list. Deterministic, so
// running it twice changes nothing.
inline TriangulationRecord annotate(TriangulationRecord rec) {
  validate(rec.facets);
  const Triangulation& T = rec.facets;
  rec.gkz = gkz_vector(T);
  rec.b_vec = b_vector(T);
  rec.orbit_size = coordinate_orbit(T).size();
  rec.altshuler = altshuler_determinant(T);
  rec.canon_key = canonical_key(T);

  Cone seccone = facet_description(secondary_cone(T));
  auto ip = min_sum_integer_point(seccone);
  if (!ip) throw domain_error("annotate: secondary cone has no interior integer point");
  rec.interior_point = *ip;
  rec.secondary_facet_count = seccone.ineqs.size();

  Classification cls = classify_all(T);
  rec.motifs.entries.clear();
  for (const auto* c : cls.all()) {
    OccurrenceEntry e;
    e.occ = c->occ;
    e.classification = c->cone.classification;
    e.walls = c->cone.walls;
    e.equations = c->cone.equations;
    rec.motifs.entries.push_back(std::move(e));
  }
  rec.motifs.total = rec.motifs.entries.size();
  rec.motifs.counts.clear();
  for (const auto& def : catalog()) {
    std::size_t n = 0;
    for (const auto& e : rec.motifs.entries) {
      if (e.occ.motif == def.name) ++n;
    }
    rec.motifs.counts.emplace_back(def.name, n);
  }
  return rec;
}

inline json record_to_json(const TriangulationRecord& rec) {
  json out;
  out["id"] = rec.id;
  out["facets"] = facets_to_json(rec.facets);
  json gkz = json::array();
  for (const auto& g : rec.gkz) gkz.push_back(int_to_json(g));
  out["gkz"] = gkz;
  out["b_vector"] = rec.b_vec;
  out["orbit_size"] = rec.orbit_size;
  out["canonical_key"] = rec.canon_key;
  out["altshuler"] = rec.altshuler.str();
  out["interior_point"] = ivec_to_json(rec.interior_point);
  out["secondary_facet_count"] = rec.secondary_facet_count;

  json counts;
  for (const auto& [name, n] : rec.motifs.counts) counts[name] = n;
  json occs = json::array();
  for (const auto& e : rec.motifs.entries) {
    json o = occurrence_to_json(e.occ);
    o["classification"] = to_string(e.classification);
    json walls = json::array();
    for (const auto& w : e.walls) walls.push_back(wall_to_json(w));
    o["walls"] = walls;
    json eqs = json::array();
    for (const auto& q : e.equations) eqs.push_back(wall_to_json(q));
    o["equations"] = eqs;
    occs.push_back(std::move(o));
  }
  json motifs;
  motifs["counts"] = counts;
  motifs["total"] = rec.motifs.total;
  motifs["occurrences"] = occs;
  out["motifs"] = motifs;
  return out;
}

inline Visibility visibility_from_string(const std::string& s) {
  if (s == "global") return Visibility::global;
  if (s == "partial") return Visibility::partial;
  if (s == "hardly") return Visibility::hardly;
  throw domain_error("unknown classification " + s);
}

inline TriangulationRecord record_from_json(const json& j) {
  TriangulationRecord rec;
  rec.id = j.at("id").get<long long>();
  rec.facets = facets_from_json(j.at("facets"));
  const json& gkz = j.at("gkz");
  for (std::size_t i = 0; i < 20; ++i) rec.gkz[i] = int_from_json(gkz.at(i));
  rec.b_vec = j.at("b_vector").get<std::array<std::size_t, 4>>();
  rec.orbit_size = j.at("orbit_size").get<std::size_t>();
  rec.canon_key = j.at("canonical_key").get<std::string>();
  rec.altshuler = Int(j.at("altshuler").get<std::string>());
  rec.interior_point = ivec_from_json(j.at("interior_point"));
  rec.secondary_facet_count = j.at("secondary_facet_count").get<std::size_t>();
  const json& motifs = j.at("motifs");
  for (const auto& [name, n] : motifs.at("counts").items()) {
    rec.motifs.counts.emplace_back(name, n.get<std::size_t>());
  }
  rec.motifs.total = motifs.at("total").get<std::size_t>();
  for (const auto& o : motifs.at("occurrences")) {
    OccurrenceEntry e;
    e.occ = occurrence_from_json(o);
    e.classification = visibility_from_string(o.at("classification").get<std::string>());
    for (const auto& w : o.at("walls")) e.walls.push_back(wall_from_json(w));
    for (const auto& q : o.at("equations")) e.equations.push_back(wall_from_json(q));
    rec.motifs.entries.push_back(std::move(e));
  }
  return rec;
}

using Store = std::vector<TriangulationRecord>;

inline std::string serialize_store(const Store& store) {
  std::string out;
  for (const auto& rec : store) {
    out += record_to_json(rec).dump();
    out += "\n";
  }
  return out;
}

inline void save_store(const std::string& path, const Store& store) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open " + path + " for writing");
  f << serialize_store(store);
}

inline Store parse_store(std::istream& in) {
  Store store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      store.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw domain_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return store;
}

inline Store load_store(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open " + path);
  return parse_store(f);
}

namespace recorddetail {

// A facet list written with braces is structurally a nested JSON array
// once the braces become brackets.
inline json braces_to_json(const std::string& line) {
  std::string converted = line;
  for (auto& ch : converted) {
    if (ch == '{') ch = '[';
    if (ch == '}') ch = ']';
  }
  return json::parse(converted);
}

inline Triangulation facets_from_line(const std::string& line, long long* id_out) {
  std::string trimmed = line;
  std::size_t first = trimmed.find_first_not_of(" \t\r");
  trimmed = trimmed.substr(first);
  json j;
  if (trimmed[0] == '[') {
    j = json::parse(trimmed);
  } else if (trimmed[0] == '{') {
    std::size_t next = trimmed.find_first_not_of(" \t", 1);
    if (next != std::string::npos && trimmed[next] == '"') {
      json obj = json::parse(trimmed);
      if (obj.contains("id")) *id_out = obj.at("id").get<long long>();
      j = obj.at("facets");
    } else {
      j = braces_to_json(trimmed);
    }
  } else {
    throw domain_error("expected a facet list");
  }
  Triangulation T = facets_from_json(j);
  if (T.size() != 27) {
    throw domain_error("expected 27 facets, got " + std::to_string(T.size()));
  }
  for (const auto& c : T) {
    if (c.size() != 4) throw domain_error("every facet needs 4 points");
  }
  return T;
}

}  // namespace recorddetail

// Reads one facet list per line (brace text, JSON array, or a JSON
// object with "facets" and optional "id"), canonicalizes, annotates.
inline Store ingest_stream(std::istream& in, long long next_id = 1) {
  Store store;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    TriangulationRecord rec;
    long long given_id = 0;
    try {
      rec.facets = recorddetail::facets_from_line(line, &given_id);
      validate(rec.facets);
      rec.facets = canonical_representative(rec.facets);
      rec = annotate(std::move(rec));
    } catch (const std::exception& e) {
      throw domain_error("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (given_id > 0) {
      rec.id = given_id;
      next_id = std::max(next_id, given_id + 1);
    } else {
      rec.id = next_id++;
    }
    store.push_back(std::move(rec));
  }
  return store;
}

inline Store ingest(const std::string& path, long long next_id = 1) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open " + path);
  return ingest_stream(f, next_id);
}

inline Store query_id(const Store& store, long long id) {
  Store out;
  for (const auto& r : store) {
    if (r.id == id) out.push_back(r);
  }
  return out;
}

inline Store query_gkz(const Store& store, const std::array<Int, 20>& gkz) {
  Store out;
  for (const auto& r : store) {
    if (r.gkz == gkz) out.push_back(r);
  }
  return out;
}

inline Store query_canonical_key(const Store& store, const std::string& key) {
  Store out;
  for (const auto& r : store) {
    if (r.canon_key == key) out.push_back(r);
  }
  return out;
}

inline Store query_altshuler(const Store& store, const Int& value) {
  Store out;
  for (const auto& r : store) {
    if (r.altshuler == value) out.push_back(r);
  }
  return out;
}

inline Store query_motif_count(const Store& store, std::size_t lo, std::size_t hi) {
  Store out;
  for (const auto& r : store) {
    if (r.motifs.total >= lo && r.motifs.total <= hi) out.push_back(r);
  }
  return out;
}

// Dispatch for the command line: kind is one of id, gkz, canonical_key,
// altshuler, motif-count (value "lo,hi" or a single count).
inline Store query(const Store& store, const std::string& kind, const std::string& value) {
  if (kind == "id") return query_id(store, std::stoll(value));
  if (kind == "gkz") {
    std::array<Int, 20> g{};
    std::stringstream ss(value);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= 20) throw domain_error("gkz needs exactly 20 entries");
      g[i++] = Int(tok);
    }
    if (i != 20) throw domain_error("gkz needs exactly 20 entries");
    return query_gkz(store, g);
  }
  if (kind == "canonical_key") return query_canonical_key(store, value);
  if (kind == "altshuler") return query_altshuler(store, Int(value));
  if (kind == "motif-count") {
    std::size_t comma = value.find(',');
    if (comma == std::string::npos) {
      std::size_t n = std::stoull(value);
      return query_motif_count(store, n, n);
    }
    return query_motif_count(store, std::stoull(value.substr(0, comma)),
                             std::stoull(value.substr(comma + 1)));
  }
  throw domain_error("unknown query key " + kind);
}

}  // namespace tropcubics
