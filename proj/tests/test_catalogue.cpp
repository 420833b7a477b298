#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "tourlink/catalogue.hpp"
#include "tourlink/errors.hpp"

using namespace tourlink;

TEST_CASE("compact notation") {
  const CompactEntry link = parse_compact("457-236");
  REQUIRE(link.is_link());
  CHECK(link.components[0].verts() == std::vector<Vertex>{3, 4, 6});
  CHECK(link.components[1].verts() == std::vector<Vertex>{1, 2, 5});

  const CompactEntry knot = parse_compact("15862347");
  REQUIRE_FALSE(knot.is_link());
  CHECK(knot.components[0].verts() == std::vector<Vertex>{0, 4, 7, 5, 1, 2, 3, 6});
  CHECK(to_compact(knot.components[0]) == "15862347");
  CHECK(to_compact(LinkEntry{link.components[0], link.components[1]}) == "457-236");

  for (const char* bad : {"457-474", "454-236", "45-236", "457-23", "4a7", "457--236", "457-236-1", "", "0123"})
    CHECK_THROWS_AS((void)parse_compact(bad), ParseError);
}

TEST_CASE("shipped catalogues") {
  const auto fm = fmellor_k7();
  CHECK(fm.name() == "FMellorK7");
  CHECK(fm.order() == 7);
  CHECK(fm.links().size() == 21);
  CHECK(fm.knots().empty());
  for (const auto& l : fm.links()) {
    CHECK(l.first.disjoint_from(l.second));
    for (const auto* p : {&l.first, &l.second})
      for (Vertex v : p->verts()) CHECK((v >= 0 && v < 7));
  }

  const auto amt = amt_k8();
  CHECK(amt.order() == 8);
  CHECK(amt.links().empty());
  CHECK(amt.knots().size() == 29);
  for (const auto& k : amt.knots())
    for (Vertex v : k.verts()) CHECK((v >= 0 && v < 8));

  const auto cg = conway_gordon_k7();
  CHECK(cg.order() == 7);
  REQUIRE(cg.knots().size() == 1);
  CHECK(cg.knots()[0] == CyclePattern({0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("catalogue construction validates and deduplicates") {
  const CyclePattern a({0, 1, 2}), b({3, 4, 5});
  const EmbeddingCatalogue dup("x", 6, {{a, b}, {b, a}, {CyclePattern({2, 1, 0}), b}}, {a, CyclePattern({1, 2, 0})});
  CHECK(dup.links().size() == 1);
  CHECK(dup.knots().size() == 1);
  CHECK_THROWS_AS(EmbeddingCatalogue("x", 5, {{a, b}}, {}), DomainError);
  CHECK_THROWS_AS(EmbeddingCatalogue("x", 6, {{a, CyclePattern({2, 3, 4})}}, {}), DomainError);
}

TEST_CASE("catalogue JSON round trip and errors") {
  const auto fm = fmellor_k7();
  const auto again = EmbeddingCatalogue::from_json_text(fm.to_json_text());
  CHECK(again.name() == fm.name());
  REQUIRE(again.links().size() == fm.links().size());
  for (std::size_t i = 0; i < fm.links().size(); ++i) CHECK(to_compact(again.links()[i]) == to_compact(fm.links()[i]));
  CHECK_THROWS_AS((void)EmbeddingCatalogue::from_json_text("{"), ParseError);
  CHECK_THROWS_AS((void)EmbeddingCatalogue::from_json_text(R"({"n":7})"), ParseError);
  CHECK_THROWS_AS((void)EmbeddingCatalogue::from_json_text(R"({"name":"a","n":7,"links":["123"]})"), ParseError);
  CHECK_THROWS_AS((void)EmbeddingCatalogue::from_json_text(R"({"name":"a","n":7,"knots":["123-456"]})"), ParseError);
  CHECK_THROWS_AS((void)EmbeddingCatalogue::load("/nonexistent/catalogue.json"), ParseError);
}

TEST_CASE("data directory override") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tourlink_catalogue_override";
  fs::create_directories(dir / "catalogues");
  std::ofstream(dir / "catalogues" / "conway_gordon_k7.json") << R"({"name":"CGK7","n":7,"links":[],"knots":["1234576"]})";
  ::setenv("TOURLINK_DATA_DIR", dir.c_str(), 1);
  CHECK(data_dir() == dir);
  const auto cg = conway_gordon_k7();
  ::unsetenv("TOURLINK_DATA_DIR");
  REQUIRE(cg.knots().size() == 1);
  CHECK(cg.knots()[0] == CyclePattern({0, 1, 2, 3, 4, 6, 5}));
  CHECK(conway_gordon_k7().knots()[0] == CyclePattern({0, 1, 2, 3, 4, 5, 6}));
  fs::remove_all(dir);
}
