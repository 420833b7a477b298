#include "tourlink/d4.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tourlink/errors.hpp"
#include "tourlink/surgery.hpp"

namespace tourlink {

std::optional<TriangleEnds> triangle_ends(const Tournament& t, const Triangle& tri) {
  for (int s = 0; s < 3; ++s) {
    const Vertex a = tri[static_cast<std::size_t>(s)];
    const Vertex b = tri[static_cast<std::size_t>((s + 1) % 3)];
    const Vertex c = tri[static_cast<std::size_t>((s + 2) % 3)];
    if (t.has_arc(a, b) && t.has_arc(a, c)) {
      return t.has_arc(b, c) ? TriangleEnds{a, b, c} : TriangleEnds{a, c, b};
    }
  }
  return std::nullopt;
}

bool is_d4_ring(const OrientedGraph& g, const D4Witness& w) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::size_t arcs = 0;
  auto mark = [&](Vertex v) {
    if (v < 0 || v >= g.order()) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex s = w.sources[i], m = w.middles[i], t = w.sinks[i];
    if (!mark(s) || !mark(m) || !mark(t)) return false;
    if (s == t || s == m || m == t) return false;
    if (!g.has_arc(s, t) || !g.has_arc(s, m) || !g.has_arc(m, t)) return false;
    if (g.in_degree(m) != 1 || g.out_degree(m) != 1) return false;
    arcs += 3;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    Vertex at = w.sinks[i];
    const Vertex goal = w.sources[(i + 1) % 4];
    // Walk the junction; every step must be forced.
    for (int steps = 0; at != goal; ++steps) {
      if (steps > g.order()) return false;
      const auto next = g.out_neighbours(at);
      if (next.size() != 1) return false;
      ++arcs;
      at = next.front();
      if (at != goal) {
        if (g.in_degree(at) != 1 || g.out_degree(at) != 1) return false;
        mark(at);
      }
    }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (w.sources[i] == w.sources[j] || w.sinks[i] == w.sinks[j]) return false;
  return arcs == g.arc_count() && std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

D4Witness build_d4_witness(const Tournament& t, std::span<const Triangle, 4> triangles,
                           std::span<const RingJunction, 4> junctions) {
  std::array<TriangleEnds, 4> ends{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (Vertex v : triangles[i])
      if (v < 0 || v >= t.order()) throw DomainError("triangle vertex out of range");
    const auto e = triangle_ends(t, triangles[i]);
    if (!e) throw DomainError("triangle " + std::to_string(i + 1) + " is a 3-cycle, it has no source and sink");
    ends[i] = *e;
  }

  // Each vertex is used once, except a sink shared with the next source.
  std::map<Vertex, int> uses;
  for (const auto& tri : triangles)
    for (Vertex v : tri) ++uses[v];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& path = junctions[i].path;
    const Vertex from = ends[i].sink;
    const Vertex to = ends[(i + 1) % 4].source;
    if (path.empty() || path.front() != from || path.back() != to)
      throw DomainError("junction " + std::to_string(i + 1) + " does not run from a sink to the next source");
    if (path.size() == 1) {
      --uses[from];
      continue;
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      if (!t.has_arc(path[k], path[k + 1])) throw DomainError("junction " + std::to_string(i + 1) + " is not a directed path");
    for (std::size_t k = 1; k + 1 < path.size(); ++k) ++uses[path[k]];
  }
  for (const auto& [v, n] : uses)
    if (n != 1) throw DomainError("triangles and junctions overlap at vertex " + std::to_string(v));

  std::vector<Vertex> order;
  std::map<Vertex, Vertex> local;
  auto id = [&](Vertex v) {
    auto [it, fresh] = local.try_emplace(v, static_cast<Vertex>(order.size()));
    if (fresh) order.push_back(v);
    return it->second;
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex s = id(ends[i].source), m = id(ends[i].middle), k = id(ends[i].sink);
    arcs.push_back({s, m});
    arcs.push_back({m, k});
    arcs.push_back({s, k});
    const auto& path = junctions[i].path;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) arcs.push_back({id(path[p]), id(path[p + 1])});
  }
  OrientedGraph g(static_cast<int>(order.size()), arcs);

  std::vector<Vertex> image(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) image[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!junctions[i].contract) continue;
    const auto& path = junctions[i].path;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) {
      const Arc e{image[static_cast<std::size_t>(local.at(path[p]))], image[static_cast<std::size_t>(local.at(path[p + 1]))]};
      try {
        Contraction c = consistent_edge_contraction(g, e);
        for (Vertex& v : image) v = c.image[static_cast<std::size_t>(v)];
        g = std::move(c.graph);
      } catch (const DomainError& err) {
        throw WitnessFailure(std::string("junction ") + std::to_string(i + 1) + ": " + err.what());
      }
    }
  }

  D4Witness w;
  w.graph = std::move(g);
  auto img = [&](Vertex v) { return image[static_cast<std::size_t>(local.at(v))]; };
  for (std::size_t i = 0; i < 4; ++i) {
    w.sources[i] = img(ends[i].source);
    w.middles[i] = img(ends[i].middle);
    w.sinks[i] = img(ends[i].sink);
  }
  for (Vertex v : order) w.image.emplace_back(v, img(v));
  if (!is_d4_ring(w.graph, w)) throw WitnessFailure("contracted graph is not a D4 ring");
  return w;
}

D4Witness build_d4_witness(const Tournament& t, std::span<const Triangle, 4> triangles,
                           std::span<const Arc, 4> connectors) {
  std::array<RingJunction, 4> junctions;
  for (std::size_t i = 0; i < 4; ++i) junctions[i].path = {connectors[i].from, connectors[i].to};
  return build_d4_witness(t, triangles, std::span<const RingJunction, 4>(junctions));
}

}  // namespace tourlink
