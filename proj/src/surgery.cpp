#include "tourlink/surgery.hpp"

#include <algorithm>
#include <string>

#include "tourlink/errors.hpp"

namespace tourlink {

namespace {

void require_permutation(std::span<const Vertex> sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw DomainError("permutation has the wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw DomainError("not a bijection on the vertex set");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Tournament dual(const Tournament& t) {
  Tournament out = t;
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) {
      if (t.beats(u, v)) {
        out.orient(v, u);
      } else {
        out.orient(u, v);
      }
    }
  return out;
}

OrientedGraph dual(const OrientedGraph& g) {
  OrientedGraph out(g.order());
  for (const Arc& a : g.arcs()) out.add_arc(a.to, a.from);
  return out;
}

Tournament relabel(const Tournament& t, std::span<const Vertex> sigma) {
  require_permutation(sigma, t.order());
  Tournament out = t;
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) {
      const Vertex su = sigma[static_cast<std::size_t>(u)];
      const Vertex sv = sigma[static_cast<std::size_t>(v)];
      if (t.beats(u, v)) {
        out.orient(su, sv);
      } else {
        out.orient(sv, su);
      }
    }
  return out;
}

OrientedGraph relabel(const OrientedGraph& g, std::span<const Vertex> sigma) {
  require_permutation(sigma, g.order());
  OrientedGraph out(g.order());
  for (const Arc& a : g.arcs())
    out.add_arc(sigma[static_cast<std::size_t>(a.from)], sigma[static_cast<std::size_t>(a.to)]);
  return out;
}

std::vector<Vertex> inverse_permutation(std::span<const Vertex> sigma) {
  require_permutation(sigma, static_cast<int>(sigma.size()));
  std::vector<Vertex> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<Vertex>(i);
  return inv;
}

std::vector<Vertex> compose(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

// ------------------------------------------------------------------ contraction

bool contraction_is_consistent(const OrientedGraph& g, Arc e) {
  if (!g.has_arc(e.from, e.to)) throw DomainError("arc to contract is not in the graph");
  // e itself is the only arc we discount.
  return g.out_degree(e.from) == 1 || g.in_degree(e.to) == 1;
}

Contraction consistent_edge_contraction(const OrientedGraph& g, Arc e) {
  const Vertex v = e.from;
  const Vertex w = e.to;
  if (!contraction_is_consistent(g, e))
    throw ContractionNotConsistent("contracting " + std::to_string(v) + "->" + std::to_string(w) +
                                   ": tail is not a sink and head is not a source once the arc is removed");

  const int n = g.order();
  Contraction c;
  c.image.resize(static_cast<std::size_t>(n));
  Vertex next = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (x == w) continue;
    c.image[static_cast<std::size_t>(x)] = next++;
  }
  c.image[static_cast<std::size_t>(w)] = c.image[static_cast<std::size_t>(v)];

  c.graph = OrientedGraph(n - 1);
  for (const Arc& a : g.arcs()) {
    if (a == e) continue;
    const Vertex from = c.image[static_cast<std::size_t>(a.from)];
    const Vertex to = c.image[static_cast<std::size_t>(a.to)];
    if (c.graph.has_arc(to, from))
      throw DomainError("contraction would orient the pair (" + std::to_string(from) + "," + std::to_string(to) +
                        ") both ways");
    if (!c.graph.has_arc(from, to)) c.graph.add_arc(from, to);
  }
  return c;
}

// -------------------------------------------------------------------- expansion

Expansion vertex_expansion(const OrientedGraph& g, Vertex v, std::span<const Vertex> in_side,
                           std::span<const Vertex> out_side) {
  const int n = g.order();
  if (v < 0 || v >= n) throw DomainError("vertex to expand out of range");
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex x : in_side) {
    if (x < 0 || x >= n || !g.adjacent(v, x)) throw DomainError("in_side vertex is not a neighbour");
    side[static_cast<std::size_t>(x)] = 0;
  }
  for (Vertex x : out_side) {
    if (x < 0 || x >= n || !g.adjacent(v, x)) throw DomainError("out_side vertex is not a neighbour");
    if (side[static_cast<std::size_t>(x)] != -1) throw DomainError("in_side and out_side overlap");
    side[static_cast<std::size_t>(x)] = 1;
  }
  for (Vertex x : g.neighbours(v))
    if (side[static_cast<std::size_t>(x)] == -1)
      throw DomainError("neighbour " + std::to_string(x) + " not covered by the partition");

  Expansion ex;
  ex.d1 = v;
  ex.d2 = n;
  ex.graph = OrientedGraph(n + 1);
  for (const Arc& a : g.arcs()) {
    Arc b = a;
    if (a.from == v && side[static_cast<std::size_t>(a.to)] == 1) b.from = ex.d2;
    if (a.to == v && side[static_cast<std::size_t>(a.from)] == 1) b.to = ex.d2;
    ex.graph.add_arc(b.from, b.to);
  }
  ex.graph.add_arc(ex.d1, ex.d2);
  return ex;
}

// ------------------------------------------------------------------------- glue

Glued glue(std::span<const OrientedGraph> graphs, std::span<const MergeClass> identifications,
           GlueConflictPolicy policy) {
  // class_of[g][v] = index of the merge class holding (g, v), or -1.
  std::vector<std::vector<int>> class_of(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g)
    class_of[g].assign(static_cast<std::size_t>(graphs[g].order()), -1);
  for (std::size_t k = 0; k < identifications.size(); ++k) {
    std::vector<int> used;
    for (const GraphVertex& gv : identifications[k]) {
      if (gv.graph < 0 || gv.graph >= static_cast<int>(graphs.size()) || gv.vertex < 0 ||
          gv.vertex >= graphs[static_cast<std::size_t>(gv.graph)].order())
        throw DomainError("merge class names a vertex outside the inputs");
      if (std::find(used.begin(), used.end(), gv.graph) != used.end())
        throw DomainError("merge class holds two vertices of one graph");
      used.push_back(gv.graph);
      int& slot = class_of[static_cast<std::size_t>(gv.graph)][static_cast<std::size_t>(gv.vertex)];
      if (slot != -1) throw DomainError("vertex listed in two merge classes");
      slot = static_cast<int>(k);
    }
  }

  Glued out;
  out.image.resize(graphs.size());
  std::vector<Vertex> class_image(identifications.size(), -1);
  Vertex next = 0;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    out.image[g].resize(static_cast<std::size_t>(graphs[g].order()));
    for (Vertex v = 0; v < graphs[g].order(); ++v) {
      const int k = class_of[g][static_cast<std::size_t>(v)];
      Vertex id = 0;
      if (k == -1) {
        id = next++;
      } else {
        if (class_image[static_cast<std::size_t>(k)] == -1) class_image[static_cast<std::size_t>(k)] = next++;
        id = class_image[static_cast<std::size_t>(k)];
      }
      out.image[g][static_cast<std::size_t>(v)] = id;
    }
  }

  out.graph = OrientedGraph(next);
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (const Arc& a : graphs[g].arcs()) {
      const Arc b{out.image[g][static_cast<std::size_t>(a.from)], out.image[g][static_cast<std::size_t>(a.to)]};
      if (out.graph.has_arc(b.to, b.from)) {
        if (policy == GlueConflictPolicy::reject)
          throw GlueConflict("glued vertices " + std::to_string(b.from) + " and " + std::to_string(b.to) +
                             " are oriented both ways");
        out.overridden.emplace_back(static_cast<int>(g), b);
        continue;
      }
      if (!out.graph.has_arc(b.from, b.to)) out.graph.add_arc(b.from, b.to);
    }
  }
  return out;
}

Tournament complete_to_tournament(const OrientedGraph& g, CompletionPolicy policy) {
  OrientedGraph full = g;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (full.adjacent(u, v)) continue;
      if (policy == CompletionPolicy::low_to_high) {
        full.add_arc(u, v);
      } else {
        full.add_arc(v, u);
      }
    }
  return Tournament::from_graph(full);
}

}  // namespace tourlink
