#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tropcubics/records.hpp"
#include "tropcubics/surface.hpp"

#include "fixtures.hpp"

using namespace tropcubics;

namespace {

const TriangulationRecord& example_record() {
  static const TriangulationRecord rec = [] {
    TriangulationRecord r;
    r.id = 1;
    r.facets = fixtures::example_facets();
    return annotate(std::move(r));
  }();
  return rec;
}

std::string braces_line(const Triangulation& T) {
  std::string out = "{";
  for (std::size_t c = 0; c < T.size(); ++c) {
    if (c) out += ",";
    out += "{";
    for (std::size_t v = 0; v < 4; ++v) {
      if (v) out += ",";
      out += std::to_string(T[c][v]);
    }
    out += "}";
  }
  out += "}";
  return out;
}

} // namespace

TEST_CASE("annotation fills every derived field") {
  const TriangulationRecord& rec = example_record();
  REQUIRE(rec.id == 1);
  for (std::size_t i = 0; i < 20; ++i)
    REQUIRE(rec.gkz[i] == fixtures::example_gkz()[i]);
  REQUIRE(rec.b_vec == std::array<std::size_t, 4>{2, 4, 2, 2});
  REQUIRE(rec.orbit_size == 24);
  REQUIRE(rec.altshuler == 614912);
  REQUIRE(rec.canon_key == canonical_key(fixtures::example_facets()));
  REQUIRE(rec.secondary_facet_count == 16);
  REQUIRE(rec.motifs.total == 51);
  REQUIRE(rec.motifs.counts.size() == 10);
  for (std::size_t m = 0; m < 10; ++m)
    REQUIRE(rec.motifs.counts[m].second == fixtures::example_motif_counts()[m]);
  REQUIRE(rec.motifs.entries.size() == 51);

  QVec q;
  for (const auto& c : rec.interior_point) q.emplace_back(c);
  REQUIRE(normalized(dual_subdivision(q)) == fixtures::example_facets());
}

TEST_CASE("annotation is idempotent") {
  TriangulationRecord again = annotate(example_record());
  REQUIRE(record_to_json(again).dump() == record_to_json(example_record()).dump());
}

TEST_CASE("records survive a json round trip byte for byte") {
  json j = record_to_json(example_record());
  REQUIRE(j.at("altshuler").is_string());
  REQUIRE(j.at("altshuler").get<std::string>() == "614912");
  TriangulationRecord back = record_from_json(j);
  REQUIRE(record_to_json(back).dump() == j.dump());
}

TEST_CASE("store serialization round trips through a stream") {
  Store store = {example_record()};
  std::string text = serialize_store(store);
  std::istringstream in(text);
  Store back = parse_store(in);
  REQUIRE(back.size() == 1);
  REQUIRE(serialize_store(back) == text);
}

TEST_CASE("store files round trip") {
  const char* path = "records_roundtrip.jsonl";
  Store store = {example_record()};
  save_store(path, store);
  Store back = load_store(path);
  REQUIRE(serialize_store(back) == serialize_store(store));
  std::remove(path);
}

TEST_CASE("parse errors carry the line number") {
  std::istringstream in("\n{broken\n");
  REQUIRE_THROWS_WITH(parse_store(in), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("canonical representative is orbit invariant") {
  const Triangulation& T = fixtures::example_facets();
  Triangulation canon = canonical_representative(T);
  for (Perm4 p : {Perm4{1, 0, 2, 3}, Perm4{2, 3, 0, 1}, Perm4{3, 0, 1, 2}})
    REQUIRE(canonical_representative(apply_perm(p, T)) == canon);
  auto canon_gkz = gkz_vector(canon);
  for (const auto& p : all_perm4()) {
    auto g = gkz_vector(apply_perm(p, canon));
    REQUIRE(canon_gkz <= g);
  }
}

TEST_CASE("ingest reads brace text and json objects") {
  std::string object_line = "{\"id\": 7, \"facets\": " +
                            facets_to_json(fixtures::honeycomb_facets()).dump() + "}";
  std::istringstream in(braces_line(fixtures::example_facets()) + "\n" + object_line + "\n");
  Store store = ingest_stream(in);
  REQUIRE(store.size() == 2);
  REQUIRE(store[0].id == 1);
  REQUIRE(store[0].facets == canonical_representative(fixtures::example_facets()));
  REQUIRE(store[0].motifs.total == 51);
  REQUIRE(store[1].id == 7);
  REQUIRE(store[1].facets == canonical_representative(fixtures::honeycomb_facets()));
  REQUIRE(store[1].altshuler == 0);

  SECTION("queries find the ingested records") {
    REQUIRE(query_id(store, 7).size() == 1);
    REQUIRE(query_id(store, 3).empty());
    REQUIRE(query_gkz(store, store[0].gkz).size() == 1);
    REQUIRE(query(store, "canonical_key", store[1].canon_key).size() == 1);
    REQUIRE(query(store, "altshuler", "614912").size() == 1);
    Store by_count = query(store, "motif-count", "51,51");
    bool found = false;
    for (const auto& r : by_count) found = found || r.id == 1;
    REQUIRE(found);
    REQUIRE(query(store, "motif-count", "0,1000").size() == 2);
    REQUIRE_THROWS_AS(query(store, "bogus", "1"), domain_error);
  }
}

TEST_CASE("ingest rejects short facet lists with a line number") {
  std::istringstream in("{{0,1,4,10}}\n");
  REQUIRE_THROWS_WITH(ingest_stream(in), Catch::Matchers::ContainsSubstring("line 1"));
}
