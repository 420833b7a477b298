#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tourlink/errors.hpp"
#include "tourlink/iso.hpp"
#include "tourlink/surgery.hpp"

using namespace tourlink;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

const Tournament kCycle3 = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});

}  // namespace

TEST_CASE("three-vertex forms") {
  const auto t = Tournament::transitive(3);
  for (const auto& p : all_labelings(3)) {
    CHECK(canonical_form(relabel(t, p)) == canonical_form(t));
    CHECK(canonical_form(relabel(kCycle3, p)) == canonical_form(kCycle3));
  }
  CHECK(canonical_form(dual(kCycle3)) == canonical_form(kCycle3));
  CHECK(canonical_form(t) != canonical_form(kCycle3));
  CHECK(canonical_form(t).to_string() == "000");
  CHECK(canonical_form(kCycle3).to_string() == "010");
}

TEST_CASE("canonical form agrees with exhaustive minimisation") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 7; ++n) {
    const int trials = n <= 6 ? 300 : 40;
    for (int i = 0; i < trials; ++i) {
      const Tournament t = oracle::random_tournament(n, rng);
      CHECK(canonical_form(t).bits == oracle::brute_canonical(t));
    }
  }
}

TEST_CASE("canonical labeling reproduces the form") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Tournament t = oracle::random_tournament(n, rng);
    const CanonicalLabeling l = canonical_labeling(t);
    CHECK(relabel(t, l.position) == l.form.tournament());
    CHECK(canonical_form(l.form.tournament()) == l.form);
    const auto sigma = oracle::random_permutation(n, rng);
    CHECK(canonical_form(relabel(t, sigma)) == l.form);
    CHECK(isomorphic(t, relabel(t, sigma)));
  }
}

TEST_CASE("canonical form size limit") {
  std::mt19937_64 rng(1);
  CHECK_NOTHROW((void)canonical_form(oracle::random_tournament(kMaxCanonicalOrder, rng)));
  CHECK_THROWS_AS((void)canonical_form(oracle::random_tournament(kMaxCanonicalOrder + 1, rng)), UnsupportedSize);
}

TEST_CASE("form strings round trip") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 10; ++n) {
    const CanonicalForm f = canonical_form(oracle::random_tournament(n, rng));
    CHECK(f.to_string().size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(CanonicalForm::from_string(f.to_string()) == f);
  }
}

TEST_CASE("class counts") {
  const std::map<int, std::size_t> expected{{3, 2}, {4, 4}, {5, 12}, {6, 56}, {7, 456}, {8, 6880}};
  for (const auto& [n, count] : expected) CHECK(enumerate_canonical_forms(n, 4).size() == count);
  CHECK_THROWS_AS((void)enumerate_tournaments(2), UnsupportedSize);
  CHECK_THROWS_AS((void)enumerate_tournaments(9), UnsupportedSize);
}

TEST_CASE("every orientation lands on exactly one representative") {
  for (int n = 3; n <= 5; ++n) {
    const auto reps = enumerate_tournaments(n);
    std::map<std::uint64_t, int> hits;
    for (const auto& r : reps) hits[oracle::brute_canonical(r)] = 0;
    CHECK(hits.size() == reps.size());
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto key = oracle::brute_canonical(oracle::orientation(n, code));
      REQUIRE(hits.contains(key));
      ++hits[key];
    }
    std::uint64_t sum = 0;
    for (const auto& r : reps) {
      const auto h = static_cast<std::uint64_t>(hits[oracle::brute_canonical(r)]);
      CHECK(h == factorial(n) / oracle::automorphisms(r));
      sum += h;
    }
    CHECK(sum == total);
  }
}

TEST_CASE("orbit sizes account for every labelled tournament") {
  for (int n = 6; n <= 8; ++n) {
    const auto reps = enumerate_tournaments(n, 4);
    std::uint64_t sum = 0;
    for (const auto& r : reps) sum += factorial(n) / oracle::automorphisms(r);
    CHECK(sum == std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST_CASE("enumeration order, representatives and duals") {
  for (int n = 3; n <= 8; ++n) {
    const auto forms = enumerate_canonical_forms(n, 3);
    const auto reps = enumerate_tournaments(n, 2);
    REQUIRE(forms.size() == reps.size());
    std::set<CanonicalForm> seen(forms.begin(), forms.end());
    CHECK(seen.size() == forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (i > 0) CHECK(forms[i - 1] < forms[i]);
      CHECK(forms[i].tournament() == reps[i]);
      CHECK(seen.contains(canonical_form(dual(reps[i]))));
    }
  }
}

TEST_CASE("enumeration is independent of worker count") {
  CHECK(enumerate_canonical_forms(7, 1) == enumerate_canonical_forms(7, 8));
}

TEST_CASE("labelings") {
  CHECK(all_labelings(3).size() == 6);
  CHECK(all_labelings(7).size() == 5040);
  const auto eight = all_labelings(8);
  CHECK(eight.size() == 40320);
  CHECK(std::is_sorted(eight.begin(), eight.end()));
  CHECK(std::set<std::vector<Vertex>>(eight.begin(), eight.end()).size() == 40320);
  std::size_t streamed = 0;
  for_each_labeling(5, [&](const std::vector<Vertex>&) { return ++streamed < 10; });
  CHECK(streamed == 10);
}
