#pragma once

// Relabelling and the graph surgeries used to assemble the constructions:
// dual, consistent edge contraction, vertex expansion, gluing and completion.
// Every operation returns a new value; vertices of the result are renumbered
// 0..n'-1 and the provenance of each input vertex is returned alongside.

#include <span>
#include <vector>

#include "tourlink/digraph.hpp"

namespace tourlink {

/// Reverses every arc.
[[nodiscard]] Tournament dual(const Tournament& t);
[[nodiscard]] OrientedGraph dual(const OrientedGraph& g);

/// Moves vertex u to sigma[u]: arc(sigma[u], sigma[v]) in the result iff arc(u, v) in t.
/// Throws DomainError unless sigma is a permutation of 0..n-1.
[[nodiscard]] Tournament relabel(const Tournament& t, std::span<const Vertex> sigma);
[[nodiscard]] OrientedGraph relabel(const OrientedGraph& g, std::span<const Vertex> sigma);

[[nodiscard]] std::vector<Vertex> inverse_permutation(std::span<const Vertex> sigma);
/// (a o b)[v] = a[b[v]].
[[nodiscard]] std::vector<Vertex> compose(std::span<const Vertex> a, std::span<const Vertex> b);

struct Contraction {
  OrientedGraph graph;
  /// image[old vertex] = vertex of the contracted graph; tail and head share one image.
  std::vector<Vertex> image;
};

/// Identifies the ends of arc e = v->w and drops e.
///
/// Allowed only when v is a sink or w is a source in G minus e
/// (ContractionNotConsistent otherwise); a missing arc is a DomainError. If a
/// common neighbour x has x->v and w->x (or v->x and x->w) the merge would need
/// both x->m and m->x, which an oriented graph cannot hold, and a DomainError
/// is raised. The merged vertex takes the tail's position; the head's slot is
/// removed and later vertices shift down by one.
[[nodiscard]] Contraction consistent_edge_contraction(const OrientedGraph& g, Arc e);

/// True when consistent_edge_contraction(g, e) would pass its consistency test.
[[nodiscard]] bool contraction_is_consistent(const OrientedGraph& g, Arc e);

struct Expansion {
  OrientedGraph graph;
  Vertex d1 = 0;  ///< keeps the id of the expanded vertex
  Vertex d2 = 0;  ///< appended as the last vertex
};

/// Replaces v by an arc d1->d2. Arcs between v and in_side move to d1, arcs
/// between v and out_side move to d2; each keeps its original direction.
/// in_side and out_side must partition the neighbours of v (DomainError).
[[nodiscard]] Expansion vertex_expansion(const OrientedGraph& g, Vertex v, std::span<const Vertex> in_side,
                                         std::span<const Vertex> out_side);

/// One vertex of one input graph.
struct GraphVertex {
  int graph = 0;
  Vertex vertex = 0;
};

using MergeClass = std::vector<GraphVertex>;

enum class GlueConflictPolicy {
  reject,      ///< throw GlueConflict
  keep_first,  ///< keep the arc already placed, record the other in Glued::overridden
};

struct Glued {
  OrientedGraph graph;
  /// image[g][v] = vertex of the glued graph.
  std::vector<std::vector<Vertex>> image;
  /// Arcs (in result ids) that lost to an opposite arc under keep_first, with
  /// the index of the input graph that contributed them.
  std::vector<std::pair<int, Arc>> overridden;
};

/// Disjoint union with each merge class identified to a single vertex.
///
/// Result vertices are numbered in order of first appearance, scanning graph
/// 0 vertex 0 upwards, then graph 1, and so on. A class may not contain two
/// vertices of the same input graph, and a vertex may sit in at most one class.
[[nodiscard]] Glued glue(std::span<const OrientedGraph> graphs, std::span<const MergeClass> identifications,
                         GlueConflictPolicy policy = GlueConflictPolicy::reject);

enum class CompletionPolicy { low_to_high, high_to_low };

/// Orients every missing pair by the policy; existing arcs are kept.
[[nodiscard]] Tournament complete_to_tournament(const OrientedGraph& g,
                                                CompletionPolicy policy = CompletionPolicy::low_to_high);

}  // namespace tourlink
