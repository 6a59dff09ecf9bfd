#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tropcubics/delta2.hpp"
#include "tropcubics/records.hpp"

namespace {

using namespace tropcubics;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

QVec parse_heights(const std::string& csv) {
  auto toks = split_csv(csv);
  if (toks.size() != kNumPoints) {
    throw usage_error("expected 20 heights, got " + std::to_string(toks.size()));
  }
  QVec out;
  try {
    for (const auto& t : toks) out.push_back(parse_rational(t));
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  return out;
}

Pluecker parse_pluecker(const std::string& csv) {
  auto toks = split_csv(csv);
  if (toks.size() != 6) {
    throw usage_error("expected 6 coordinates, got " + std::to_string(toks.size()));
  }
  Pluecker out;
  try {
    for (std::size_t i = 0; i < 6; ++i) out[i] = parse_rational(toks[i]);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  return out;
}

Triangulation parse_facets(const std::string& text) {
  long long ignored = 0;
  try {
    return recorddetail::facets_from_line(text, &ignored);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(e.what());
  }
}

std::string facets_to_braces(const Triangulation& T) {
  std::string out = "{";
  for (std::size_t c = 0; c < T.size(); ++c) {
    if (c > 0) out += ",";
    out += "{";
    for (std::size_t i = 0; i < T[c].size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(T[c][i]);
    }
    out += "}";
  }
  out += "}";
  return out;
}

std::string piece_text(const Piece& p) {
  std::string out = "[" + to_string(p.lo) + ",";
  out += p.hi ? to_string(*p.hi) + "]" : "inf)";
  out += " -> {";
  for (std::size_t i = 0; i < p.block.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p.block[i]);
  }
  out += "}";
  return out;
}

std::string qvec_text(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

std::string occurrence_text(const MotifOccurrence& r) {
  std::string out = r.motif + " points=(";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r.points[i]);
  }
  out += ") exits=(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r.exits[i]);
  }
  out += ")";
  return out;
}

std::string record_text(const TriangulationRecord& rec) {
  std::string out = "id=" + std::to_string(rec.id);
  out += " gkz=(";
  for (std::size_t i = 0; i < 20; ++i) {
    if (i > 0) out += ",";
    out += rec.gkz[i].str();
  }
  out += ") altshuler=" + rec.altshuler.str();
  out += " orbit=" + std::to_string(rec.orbit_size);
  out += " motifs=" + std::to_string(rec.motifs.total);
  return out;
}

struct Options {
  std::string format = "text";
  std::string store;
};

Triangulation triangulation_input(const std::string& heights_csv,
                                  const std::string& facets_text) {
  if (!heights_csv.empty() && !facets_text.empty()) {
    throw usage_error("give either heights or facets, not both");
  }
  Triangulation T;
  if (!heights_csv.empty()) {
    T = dual_subdivision(parse_heights(heights_csv));
  } else if (!facets_text.empty()) {
    T = parse_facets(facets_text);
  } else {
    throw usage_error("need --heights or --facets");
  }
  validate(T);
  return T;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for tropical cubic surfaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--store", opt.store, "record store path")->envname("TROP3_STORE");

  std::string heights_csv, facets_text, pluecker_csv, input_path;
  std::string occ_motif, occ_points, occ_exits, query_key, query_value;
  long long occ_index = -1;

  auto* subdivide = app.add_subcommand("subdivide", "dual subdivision of a height vector");
  subdivide->add_option("--heights", heights_csv, "20 comma-separated rationals")->required();
  subdivide->callback([&] {
    Triangulation T = dual_subdivision(parse_heights(heights_csv));
    if (opt.format == "json") {
      std::cout << facets_to_json(T).dump() << "\n";
    } else {
      std::cout << facets_to_braces(T) << "\n";
    }
  });

  auto* seccone_cmd = app.add_subcommand("secondary-cone", "facets of the secondary cone");
  seccone_cmd->add_option("--heights", heights_csv, "20 comma-separated rationals");
  seccone_cmd->add_option("--facets", facets_text, "facet list (braces or JSON)");
  seccone_cmd->callback([&] {
    Triangulation T = triangulation_input(heights_csv, facets_text);
    Cone K = facet_description(secondary_cone(T));
    if (opt.format == "json") {
      json out;
      out["facet_count"] = K.ineqs.size();
      out["lineality_dim"] = lineality_dim(K);
      json facets = json::array();
      for (const auto& f : K.ineqs) facets.push_back(wall_to_json(f));
      out["facets"] = facets;
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text = std::to_string(K.ineqs.size()) + " facets, lineality " +
                         std::to_string(lineality_dim(K)) + "\n";
      for (const auto& f : K.ineqs) text += wall_string(f) + "\n";
      std::cout << text;
    }
  });

  auto* linecheck = app.add_subcommand("line-check", "test a tropical line against a surface");
  linecheck->add_option("--pluecker", pluecker_csv, "6 comma-separated rationals")->required();
  linecheck->add_option("--heights", heights_csv, "20 comma-separated rationals")->required();
  linecheck->callback([&] {
    Pluecker P = parse_pluecker(pluecker_csv);
    QVec C = parse_heights(heights_csv);
    IncidenceResult r = line_on_surface(P, C);
    LineVertices lv = line_vertices(P);
    if (opt.format == "json") {
      json out = incidence_to_json(r);
      out["line"] = line_vertices_to_json(lv);
      std::cout << out.dump(2) << "\n";
    } else {
      static const char* names[5] = {"edge", "ray0", "ray1", "ray2", "ray3"};
      std::string text = r.contained ? "contained\n" : "not contained\n";
      std::string type = line_type_name(lv.type);
      text += "type " + type + "\n";
      text += "vertex q" + type.substr(0, 2) + " = " + qvec_text(lv.first) + "\n";
      text += "vertex q" + type.substr(3, 2) + " = " + qvec_text(lv.second) + "\n";
      for (std::size_t s = 0; s < r.certificates.size(); ++s) {
        text += std::string(names[s]) + " (s=" +
                std::to_string(r.certificates[s].pieces.size()) + "):";
        for (const auto& p : r.certificates[s].pieces) text += " " + piece_text(p);
        text += "\n";
      }
      if (r.witness_point) text += "witness " + qvec_text(*r.witness_point) + "\n";
      std::cout << text;
    }
  });

  auto* motifs_cmd = app.add_subcommand("motifs", "enumerate motif occurrences");
  motifs_cmd->add_option("--heights", heights_csv, "20 comma-separated rationals");
  motifs_cmd->add_option("--facets", facets_text, "facet list (braces or JSON)");
  motifs_cmd->callback([&] {
    Triangulation T = triangulation_input(heights_csv, facets_text);
    std::vector<MotifOccurrence> occs = occurrences(T);
    if (opt.format == "json") {
      json counts;
      for (const auto& def : catalog()) {
        std::size_t n = 0;
        for (const auto& r : occs) {
          if (r.motif == def.name) ++n;
        }
        counts[def.name] = n;
      }
      json list = json::array();
      for (const auto& r : occs) list.push_back(occurrence_to_json(r));
      json out;
      out["counts"] = counts;
      out["total"] = occs.size();
      out["occurrences"] = list;
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text;
      for (const auto& def : catalog()) {
        std::size_t n = 0;
        for (const auto& r : occs) {
          if (r.motif == def.name) ++n;
        }
        text += def.name + ": " + std::to_string(n) + "\n";
      }
      text += "total: " + std::to_string(occs.size()) + "\n";
      for (const auto& r : occs) text += occurrence_text(r) + "\n";
      std::cout << text;
    }
  });

  auto* vis_cmd = app.add_subcommand("visibility", "visibility cone of one occurrence");
  vis_cmd->add_option("--heights", heights_csv, "20 comma-separated rationals");
  vis_cmd->add_option("--facets", facets_text, "facet list (braces or JSON)");
  vis_cmd->add_option("--index", occ_index, "occurrence index");
  vis_cmd->add_option("--motif", occ_motif, "motif name");
  vis_cmd->add_option("--points", occ_points, "comma-separated point labels");
  vis_cmd->add_option("--exits", occ_exits, "4 comma-separated facet indices");
  vis_cmd->callback([&] {
    Triangulation T = triangulation_input(heights_csv, facets_text);
    std::vector<MotifOccurrence> occs = occurrences(T);
    MotifOccurrence R;
    if (occ_index >= 0) {
      if (static_cast<std::size_t>(occ_index) >= occs.size()) {
        throw domain_error("occurrence index out of range");
      }
      R = occs[static_cast<std::size_t>(occ_index)];
    } else if (!occ_motif.empty()) {
      if (occ_points.empty() || occ_exits.empty()) {
        throw usage_error("need --points and --exits with --motif");
      }
      R.motif = occ_motif;
      for (const auto& t : split_csv(occ_points)) R.points.push_back(std::stoi(t));
      auto ex = split_csv(occ_exits);
      if (ex.size() != 4) throw usage_error("expected 4 exits");
      for (std::size_t i = 0; i < 4; ++i) R.exits[i] = std::stoi(ex[i]);
      R = canonicalize_occurrence(R);
      bool found = false;
      for (const auto& o : occs) {
        if (o == R) found = true;
      }
      if (!found) throw domain_error("occurrence not found in this triangulation");
    } else {
      throw usage_error("need --index or --motif/--points/--exits");
    }
    VisibilityCone V = visibility_cone(T, R);
    if (opt.format == "json") {
      json out = occurrence_to_json(R);
      out["visibility"] = visibility_to_json(V);
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text = occurrence_text(R) + "\n";
      text += to_string(V.classification) + "\n";
      for (const auto& w : V.walls) text += "wall " + wall_string(w) + "\n";
      for (const auto& e : V.equations) text += "equation " + wall_string(e) + "\n";
      std::cout << text;
    }
  });

  auto* fan_cmd = app.add_subcommand("fan", "walls and cells of the visibility subdivision");
  fan_cmd->add_option("--heights", heights_csv, "20 comma-separated rationals");
  fan_cmd->add_option("--facets", facets_text, "facet list (braces or JSON)");
  fan_cmd->callback([&] {
    Triangulation T = triangulation_input(heights_csv, facets_text);
    Classification cls = classify_all(T);
    std::vector<IVec> walls = wall_arrangement(cls);
    std::vector<SchlaefliCell> cells = schlaefli_fan(T, cls);
    if (opt.format == "json") {
      json out;
      json jwalls = json::array();
      for (const auto& w : walls) jwalls.push_back(wall_to_json(w));
      out["walls"] = jwalls;
      json jcells = json::array();
      for (const auto& c : cells) jcells.push_back(cell_to_json(c));
      out["cells"] = jcells;
      out["counts"] = {{"global", cls.global.size()},
                       {"partial", cls.partial.size()},
                       {"hardly", cls.hardly.size()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text = std::to_string(cls.global.size()) + " global, " +
                         std::to_string(cls.partial.size()) + " partial, " +
                         std::to_string(cls.hardly.size()) + " hardly\n";
      for (const auto& w : walls) text += "wall " + wall_string(w) + "\n";
      for (const auto& c : cells) {
        text += "cell ";
        for (int s : c.signs) text += s > 0 ? "+" : "-";
        text += " visible=[";
        for (std::size_t i = 0; i < c.visible.size(); ++i) {
          if (i > 0) text += ",";
          text += std::to_string(c.visible[i]);
        }
        text += "]\n";
      }
      std::cout << text;
    }
  });

  auto* generic_cmd = app.add_subcommand("generic", "genericity of a height vector");
  generic_cmd->add_option("--heights", heights_csv, "20 comma-separated rationals")->required();
  generic_cmd->callback([&] {
    QVec C = parse_heights(heights_csv);
    Triangulation T = dual_subdivision(C);
    validate(T);
    Classification cls = classify_all(T);
    GenericityReport rep = is_generic(T, C, cls);
    std::vector<std::size_t> vis = visible_motifs(T, C, cls);
    if (opt.format == "json") {
      json out = genericity_to_json(rep);
      out["visible"] = vis;
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text = rep.generic ? "generic\n" : "not generic\n";
      for (const auto& w : rep.vanishing_walls) {
        text += "vanishing wall " + wall_string(w) + "\n";
      }
      for (std::size_t idx : rep.hardly_visible) {
        text += "hardly visible occurrence " + std::to_string(idx) + "\n";
      }
      text += "visible: [";
      for (std::size_t i = 0; i < vis.size(); ++i) {
        if (i > 0) text += ",";
        text += std::to_string(vis[i]);
      }
      text += "]\n";
      std::cout << text;
    }
  });

  auto* ingest_cmd = app.add_subcommand("ingest", "annotate facet lists into the store");
  ingest_cmd->add_option("--input", input_path, "file of facet lists")->required();
  ingest_cmd->callback([&] {
    long long next_id = 1;
    if (!opt.store.empty() && std::filesystem::exists(opt.store)) {
      for (const auto& rec : load_store(opt.store)) next_id = std::max(next_id, rec.id + 1);
    }
    Store recs = ingest(input_path, next_id);
    if (!opt.store.empty()) {
      std::ofstream f(opt.store, std::ios::binary | std::ios::app);
      if (!f) throw domain_error("cannot open " + opt.store + " for writing");
      f << serialize_store(recs);
    }
    if (opt.format == "json") {
      std::string text;
      for (const auto& rec : recs) text += record_to_json(rec).dump() + "\n";
      std::cout << text;
    } else {
      std::string text;
      for (const auto& rec : recs) text += record_text(rec) + "\n";
      std::cout << text;
    }
  });

  auto* query_cmd = app.add_subcommand("query", "look up records in the store");
  query_cmd->add_option("--key", query_key, "id | gkz | canonical_key | altshuler | motif-count")
      ->required();
  query_cmd->add_option("--value", query_value, "match value (ranges as lo,hi)")->required();
  query_cmd->callback([&] {
    if (opt.store.empty()) throw usage_error("query needs --store or TROP3_STORE");
    Store hits = query(load_store(opt.store), query_key, query_value);
    if (opt.format == "json") {
      std::string text;
      for (const auto& rec : hits) text += record_to_json(rec).dump() + "\n";
      std::cout << text;
    } else {
      std::string text;
      for (const auto& rec : hits) text += record_text(rec) + "\n";
      std::cout << text;
    }
  });

  auto* census_cmd = app.add_subcommand("delta2-census", "unimodular triangulations of 3D2");
  census_cmd->callback([&] {
    Delta2Census census = delta2_census();
    if (opt.format == "json") {
      json out;
      out["triangulations"] = census.triangulations;
      out["orbits"] = census.orbits;
      out["regular"] = census.regular;
      std::cout << out.dump(2) << "\n";
    } else {
      std::string text = std::to_string(census.triangulations) + " triangulations, " +
                         std::to_string(census.orbits) + " orbits, ";
      if (census.regular == census.triangulations) {
        text += "all regular\n";
      } else {
        text += std::to_string(census.triangulations - census.regular) + " irregular\n";
      }
      std::cout << text;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
