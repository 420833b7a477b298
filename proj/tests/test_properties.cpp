#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tourlink/certificate.hpp"
#include "tourlink/cycle.hpp"
#include "tourlink/surgery.hpp"

using namespace tourlink;

namespace {

CyclePattern random_cycle(int n, std::mt19937_64& rng) {
  auto p = oracle::random_permutation(n, rng);
  p.resize(3 + rng() % static_cast<std::uint64_t>(n - 2));
  return CyclePattern(p);
}

}  // namespace

TEST_CASE("consistency under dual and relabel") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Tournament t = oracle::random_tournament(n, rng);
    const auto sigma = oracle::random_permutation(n, rng);
    const CyclePattern p = random_cycle(n, rng);
    const bool c = is_consistent(t, p);
    CHECK(c == oracle::consistent(t, p.verts()));
    CHECK(c == is_consistent(dual(t), p));
    CHECK(c == is_consistent(relabel(t, sigma), p.mapped(sigma)));
  }
}

TEST_CASE("certificate existence under dual and relabel") {
  const auto fm = fmellor_k7();
  const auto amt = amt_k8();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const bool eight = i % 4 == 0;
    const auto& cat = eight ? amt : fm;
    const int n = cat.order();
    const Tournament t = oracle::random_tournament(n, rng);
    const auto pi = oracle::random_permutation(n, rng);
    const auto sigma = oracle::random_permutation(n, rng);
    const bool certified = is_certified_labeling(t, sigma, cat);
    CHECK(certified == is_certified_labeling(dual(t), sigma, cat));
    // Moving vertex v to pi[v] moves the labeling with it.
    CHECK(certified == is_certified_labeling(relabel(t, pi), compose(pi, sigma), cat));
    if (i % 50 == 0) {
      const auto found = find_certificate(t, cat);
      CHECK(found.has_value() == find_certificate(dual(t), cat).has_value());
      CHECK(found.has_value() == find_certificate(relabel(t, pi), cat).has_value());
      if (found) {
        CHECK(is_certified_labeling(dual(t), found->labeling, cat));
        CHECK(is_certified_labeling(relabel(t, pi), compose(pi, found->labeling), cat));
      }
    }
  }
}

TEST_CASE("contraction keeps consistent cycles through the merged vertex") {
  // A cycle of g through e survives contraction as a consistent cycle one shorter.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const auto order = oracle::random_permutation(n, rng);
    OrientedGraph g(n);
    for (int k = 0; k < n; ++k) g.add_arc(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>((k + 1) % n)]);
    const Arc e{order[0], order[1]};
    const Contraction c = consistent_edge_contraction(g, e);
    std::vector<Vertex> cyc;
    for (int k = 1; k < n; ++k) cyc.push_back(c.image[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);
    CHECK(is_consistent(c.graph, CyclePattern(cyc)));
  }
}
