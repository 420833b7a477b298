#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the Tournament value type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tourlink/digraph.hpp"
#include "tourlink/linking.hpp"

namespace oracle {

using tourlink::Tournament;
using tourlink::Vertex;

inline Tournament random_tournament(int n, std::mt19937_64& rng) {
  std::vector<tourlink::Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back((rng() & 1U) ? tourlink::Arc{u, v} : tourlink::Arc{v, u});
  return Tournament::from_arcs(n, arcs);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Orientation word of t read through an arrangement (slot -> vertex); pairs in
// colex order, first pair most significant, 1 when the earlier slot wins.
inline std::uint64_t word(const Tournament& t, const std::vector<Vertex>& slot) {
  std::uint64_t w = 0;
  const int n = t.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      w = (w << 1) | (t.beats(slot[static_cast<std::size_t>(i)], slot[static_cast<std::size_t>(j)]) ? 1U : 0U);
  return w;
}

// Minimum word over all n! arrangements.
inline std::uint64_t brute_canonical(const Tournament& t) {
  std::vector<Vertex> slot(static_cast<std::size_t>(t.order()));
  std::iota(slot.begin(), slot.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, word(t, slot));
  while (std::next_permutation(slot.begin(), slot.end()));
  return best;
}

// Number of vertex maps preserving every arc, by backtracking.
inline std::uint64_t automorphisms(const Tournament& t) {
  const int n = t.order();
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || t.out_degree(c) != t.out_degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = t.beats(u, v) == t.beats(image[static_cast<std::size_t>(u)], c);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      self(self, v + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
  };
  extend(extend, 0);
  return count;
}

// Every orientation of K_n, pairs in colex order, bit k of `code` orienting pair k low -> high.
inline Tournament orientation(int n, std::uint64_t code) {
  std::vector<tourlink::Arc> arcs;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) arcs.push_back(((code >> k) & 1U) ? tourlink::Arc{i, j} : tourlink::Arc{j, i});
  return Tournament::from_arcs(n, arcs);
}

// A cycle traversal is consistent when each step is an arc.
inline bool consistent(const Tournament& t, const std::vector<Vertex>& cyc) {
  auto forward = [&](bool reverse) {
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex a = cyc[i], b = cyc[(i + 1) % k];
      if (reverse ? !t.beats(b, a) : !t.beats(a, b)) return false;
    }
    return true;
  };
  return forward(false) || forward(true);
}

// GF(2) rows as bit masks; matrices here never exceed 64 columns.
inline std::vector<std::uint64_t> masks(const tourlink::Gf2Matrix& m) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) out[static_cast<std::size_t>(r)] |= std::uint64_t{1} << c;
  return out;
}

// Rank as log2 of the number of distinct subset sums of the rows.
inline int span_rank(const tourlink::Gf2Matrix& m) {
  const auto rows = masks(m);
  std::vector<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    const std::size_t k = span.size();
    for (std::size_t i = 0; i < k; ++i) span.push_back(span[i] ^ r);
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

// Heaviest subset sum of the rows, by trying every subset.
inline int heaviest_combination(const tourlink::Gf2Matrix& m) {
  const auto rows = masks(m);
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << rows.size()); ++s) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((s >> i) & 1U) v ^= rows[i];
    best = std::max(best, std::popcount(v));
  }
  return best;
}

// a * b over GF(2).
inline tourlink::Gf2Matrix multiply(const tourlink::Gf2Matrix& a, const tourlink::Gf2Matrix& b) {
  tourlink::Gf2Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      bool x = false;
      for (int k = 0; k < a.cols(); ++k) x = x != (a.get(i, k) && b.get(k, j));
      out.set(i, j, x);
    }
  return out;
}

}  // namespace oracle
