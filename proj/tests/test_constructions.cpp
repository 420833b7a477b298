#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "tourlink/constructions.hpp"
#include "tourlink/errors.hpp"
#include "tourlink/iso.hpp"

using namespace tourlink;

namespace {

std::string golden(const std::string& file) {
  std::ifstream in(std::string(TOURLINK_GOLDEN_DIR) + "/" + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string idx(const std::string& stem, int i) { return stem + std::to_string(i); }

}  // namespace

TEST_CASE("vertex counts") {
  const std::map<std::string, int> expected{{"il8", 8},      {"ik12", 12},    {"l3-23", 23},      {"l4-66", 66}, {"l5-154", 154},
                                            {"tprime8", 8},  {"tprime14", 14}, {"linkknot107", 107}, {"dlp14", 14}};
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    const auto c = build_construction(name);
    CHECK(c.tournament.order() == order);
    CHECK(expected_order(name) == order);
  }
  for (int n = 2; n <= 5; ++n) {
    const int k = (2 * n - 3) * (2 * n - 3);
    CHECK(build_nlinked(n).tournament.order() == 8 * k);
    CHECK(expected_order("nlinked", n) == 8 * k);
  }
  CHECK(construction_names().size() == 10);
  CHECK_THROWS_AS((void)build_construction("k9"), DomainError);
  CHECK_THROWS_AS((void)build_nlinked(1), DomainError);
  CHECK_THROWS_AS((void)build_klinked(3), DomainError);
}

TEST_CASE("every construction validates and keeps its arcs") {
  for (const auto& name : construction_names()) {
    CAPTURE(name);
    const auto c = build_construction(name, 4);
    const Validation v = validate(c, 4);
    for (const auto& check : v.checks) {
      CAPTURE(check.name);
      CHECK(check.passed);
    }
    CHECK(v.ok());
    for (const Arc a : c.construction.arcs()) CHECK(c.tournament.has_arc(a.from, a.to));
    std::set<Vertex> ids;
    for (const auto& [role, v] : c.roles) {
      CHECK((v >= 0 && v < c.tournament.order()));
      ids.insert(v);
    }
    CHECK(ids.size() == c.roles.size());
    CHECK_THROWS_AS((void)c.role("no such role"), DomainError);
  }
}

TEST_CASE("negative controls fail on transitive tournaments") {
  for (const std::string name : {"il8", "tprime8", "ik12", "tprime14", "dlp14"}) {
    CAPTURE(name);
    CHECK_FALSE(validate_as(name, Tournament::transitive(expected_order(name))).ok());
  }
  CHECK_FALSE(validate_as("il8", Tournament::transitive(9)).ok());
}

TEST_CASE("eight-vertex linked block") {
  const auto c = build_il8();
  const Tournament& t = c.tournament;
  int consistent = 0;
  std::vector<std::pair<int, int>> x_tri, y_tri;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const Vertex a = c.role(idx("a", i)), b = c.role(idx("b", j));
      CHECK(t.has_arc(c.role("x"), a));
      CHECK(t.has_arc(c.role("y"), a));
      CHECK(t.has_arc(a, b));
      CHECK(t.has_arc(b, c.role("x")));
      if (oracle::consistent(t, {c.role("x"), a, b})) {
        ++consistent;
        x_tri.emplace_back(i, j);
      }
      if (oracle::consistent(t, {c.role("y"), a, b})) {
        ++consistent;
        y_tri.emplace_back(i, j);
      }
    }
  CHECK(consistent == 18);
  int pairs = 0;
  for (const auto& [i, j] : x_tri)
    for (const auto& [k, l] : y_tri) pairs += (i != k && j != l);
  CHECK(pairs == 36);
  CHECK(il8_linked_triangle_pairs(t, c.roles) == 36);
  CHECK(il8_linked_triangle_pairs(Tournament::transitive(8), c.roles) == 0);
}

TEST_CASE("twelve-vertex knotted block") {
  const auto c = build_ik12();
  const Tournament& t = c.tournament;
  std::vector<Vertex> core;
  for (const char* r : {"x1", "x2", "x3", "y1", "y2", "y3"}) core.push_back(c.role(r));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k) {
        CHECK_FALSE(oracle::consistent(t, {core[i], core[j], core[k]}));
        if (k == 5) {
          CHECK(t.has_arc(core[i], core[5]));
          CHECK(t.has_arc(core[j], core[5]));
        }
      }
  for (int i = 1; i <= 3; ++i) {
    for (int s = 1; s <= 3; ++s) CHECK(t.has_arc(c.role(idx("b", i)), c.role(idx("x", s))));
    for (const char* src : {"x3", "y1", "y2"}) CHECK(t.has_arc(c.role(src), c.role(idx("a", i))));
  }
  const auto families = ik12_ring_families(t, c.roles);
  CHECK(families.size() == 180);
  for (const auto& f : families) {
    const D4Witness w = build_d4_witness(t, f.triangles, f.junctions);
    CHECK(is_d4_ring(w.graph, w));
  }
}

TEST_CASE("fourteen-vertex knotted block") {
  const auto c = build_tprime14();
  const Tournament& t = c.tournament;
  const Vertex alpha = c.role("alpha"), y3 = c.role("y3"), y3p = c.role("y3'");
  CHECK(c.construction.in_neighbours(alpha) == std::vector<Vertex>{y3});
  CHECK(c.construction.out_neighbours(alpha) == std::vector<Vertex>{y3p});
  for (int i = 1; i <= 3; ++i) {
    CHECK(t.has_arc(y3p, c.role(idx("a", i))));
    CHECK(t.has_arc(y3p, c.role(idx("b", i))));
  }
  for (const char* r : {"x1", "x2", "x3", "y1", "y2"}) CHECK(t.has_arc(c.role(r), y3));
  const auto families = tprime14_ring_families(t, c.roles);
  CHECK(families.size() == 180);
  for (const auto& f : families) {
    const D4Witness w = build_d4_witness(t, f.triangles, f.junctions);
    CHECK(is_d4_ring(w.graph, w));
  }
}

TEST_CASE("eight-vertex path block") {
  const auto c = build_tprime8();
  const Tournament& t = c.tournament;
  const Vertex c1 = c.role("c1"), c2 = c.role("c2");
  int c2_triangles = 0, c1_paths = 0;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const Vertex a = c.role(idx("a", j)), b = c.role(idx("b", k));
      c2_triangles += oracle::consistent(t, {c2, a, b});
      c1_paths += t.has_arc(a, b) && t.has_arc(a, c1) && t.has_arc(c1, b);
    }
  CHECK(c2_triangles == 9);
  CHECK(c1_paths == 9);
}

TEST_CASE("golden canonical forms") {
  const auto forms = nlohmann::json::parse(golden("canonical_forms.json"));
  CHECK(canonical_form(build_il8().tournament).to_string() == forms["il8"].get<std::string>());
  CHECK(canonical_form(build_tprime8().tournament).to_string() == forms["tprime8"].get<std::string>());
  CHECK(canonical_form(build_nlinked(2).tournament) == canonical_form(build_tprime8().tournament));
}

TEST_CASE("chain of path blocks") {
  for (int n = 3; n <= 4; ++n) {
    const auto c = build_nlinked(n);
    const int copies = (2 * n - 3) * (2 * n - 3);
    for (int i = 1; i <= copies; ++i) {
      const std::string here = "T" + std::to_string(i) + ".", next = "T" + std::to_string(i % copies + 1) + ".";
      for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j) CHECK(c.construction.has_arc(c.role(here + idx("b", k)), c.role(next + idx("a", j))));
    }
  }
}

TEST_CASE("three copies glued on one edge") {
  const auto c = build_3linked23();
  const Vertex d1 = c.role("d1"), d2 = c.role("d2");
  CHECK(c.construction.has_arc(d1, d2));
  CHECK_FALSE(c.construction.has_arc(d2, d1));
  bool reversed = false;
  for (const auto& conv : c.conventions)
    if (conv.copy == "D^") reversed = conv.arc == Arc{d2, d1};
  CHECK(reversed);
  for (const std::string copy : {"D.", "D'.", "D^."})
    for (int i = 1; i <= 3; ++i) {
      CHECK(c.construction.has_arc(c.role(copy + idx("b", i)), d1));
      CHECK(c.construction.has_arc(d2, c.role(copy + idx("a", i))));
      for (int j = 1; j <= 3; ++j) CHECK(c.construction.has_arc(c.role(copy + idx("a", i)), c.role(copy + idx("b", j))));
    }
}

TEST_CASE("ring of glued copies") {
  for (const auto& [k, copies] : std::vector<std::pair<int, int>>{{4, 3}, {5, 7}}) {
    const auto c = build_klinked(k);
    CHECK(c.tournament.order() == 23 * copies - copies);
    for (int i = 1; i <= copies; ++i) {
      const Vertex in = c.role(idx("J", i)), out = c.role(idx("J", (i + copies - 2) % copies + 1));
      CHECK(c.construction.has_arc(in, out));
      for (int j = 1; j <= 3; ++j) {
        CHECK(c.construction.has_arc(c.role("H" + std::to_string(i) + ".D." + idx("b", j)), in));
        CHECK(c.construction.has_arc(out, c.role("H" + std::to_string(i) + ".D." + idx("a", j))));
      }
    }
  }
}

TEST_CASE("107-vertex linked and knotted tournament") {
  const auto c = build_linkknot107();
  const Vertex beta = c.role("beta");
  CHECK(beta == 106);
  for (int i = 1; i <= 3; ++i) {
    CHECK(c.construction.has_arc(beta, c.role(idx("w", i))));
    CHECK(c.construction.has_arc(c.role(idx("v", i)), beta));
  }
  CHECK(c.construction.neighbours(beta).size() == 6);
  const Vertex alpha = c.role("alpha");
  for (int i = 1; i <= 3; ++i) {
    CHECK(c.construction.has_arc(c.role(idx("v", i)), alpha));
    CHECK(c.construction.has_arc(alpha, c.role(idx("w", i))));
  }
}

TEST_CASE("fourteen-vertex two-link tournament") {
  const auto c = build_dlp14();
  const Tournament& t = c.tournament;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(t.has_arc(c.role(idx("a", i)), c.role(idx("b", j))));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 5; ++j) {
      CHECK(t.has_arc(c.role(idx("c", i)), c.role(idx("a", j))));
      CHECK(t.has_arc(c.role(idx("b", j)), c.role(idx("c", i))));
    }
}
