#include <doctest.h>

#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "tourlink/constructions.hpp"
#include "tourlink/errors.hpp"
#include "tourlink/io.hpp"

using namespace tourlink;

TEST_CASE("tournament JSON is one-based and round trips") {
  const std::string text = tournament_json(Tournament::transitive(3));
  CHECK(text == "{\"n\":3,\"arcs\":[[1,2],[1,3],[2,3]]}\n");
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const Tournament t = oracle::random_tournament(1 + static_cast<int>(rng() % 20), rng);
    CHECK(parse_tournament_json(tournament_json(t)) == t);
  }
  const auto c = build_il8();
  CHECK(parse_tournament_json(construction_json(c)) == c.tournament);
  const auto j = nlohmann::json::parse(construction_json(c));
  CHECK(j["roles"]["x"] == c.role("x") + 1);
}

TEST_CASE("malformed tournament JSON") {
  for (const char* bad : {"", "[]", "{\"n\":3}", "{\"n\":\"3\",\"arcs\":[]}", "{\"n\":2,\"arcs\":[[1,3]]}",
                          "{\"n\":2,\"arcs\":[[1,1]]}", "{\"n\":2,\"arcs\":[[1,2],[2,1]]}", "{\"n\":3,\"arcs\":[[1,2]]}",
                          "{\"n\":2,\"arcs\":[[1,2,3]]}", "{\"n\":-1,\"arcs\":[]}", "{\"n\":2,\"arcs\":[[0,1]]}"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_tournament_json(bad), ParseError);
  }
  CHECK_THROWS_AS((void)load_tournament("/nonexistent/t.json"), ParseError);
}

TEST_CASE("class lines") {
  const auto forms = enumerate_canonical_forms(3);
  const auto j = nlohmann::json::parse(class_json_line(1, forms[1]));
  CHECK(j["index"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["canonical"] == forms[1].to_string());
  CHECK(j["arcs"].size() == 3);
}

TEST_CASE("report rendering") {
  const auto r = verify_target("k7-knotless", 2);
  const std::string a = report_json(r);
  CHECK(a == report_json(verify_target("k7-knotless", 1)));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["classes"] == 456);
  CHECK(j["success"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(report_json(r, true)).contains("elapsed_ms"));
  CHECK(j["outcomes"][0]["certificate"]["labeling"].size() == 7);
  CHECK(report_markdown(r).find("| classes | 456 |") != std::string::npos);
}

TEST_CASE("dot export") {
  const auto c = build_tprime8();
  const std::string dot = to_dot(c.tournament, c.name, c.roles);
  CHECK(dot.rfind("digraph \"tprime8\" {", 0) == 0);
  CHECK(dot.find("[label=\"c1\"]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  CHECK(edges == 28);
}

TEST_CASE("gap table renderings") {
  const auto rows = gap_table(3);
  const auto j = nlohmann::json::parse(gap_table_json(rows));
  CHECK(j[0]["cg_upper"] == 2);
  CHECK(gap_table_markdown(rows).find("| 2 | = 6 | = 8 | = 2 |") != std::string::npos);
}
