#pragma once

// Assembling a directed D4 ring from four transitive triangles.
//
// Triangle i has a source s_i and a sink t_i. Junction i joins t_i to
// s_{i+1} (indices mod 4) either by sharing the vertex or by a directed path.
// Everything except the triangle arcs and junction paths is deleted, then
// junction arcs are removed by consistent edge contraction. The result is four
// lobes s_i -> t_i, each made of the direct arc and the two-arc path through
// the middle vertex, strung into a ring.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tourlink/digraph.hpp"

namespace tourlink {

using Triangle = std::array<Vertex, 3>;

struct RingJunction {
  /// Starts at the sink of one triangle and ends at the source of the next.
  /// A single vertex means the two triangles share it.
  std::vector<Vertex> path;
  /// Contract the path away, or keep it as an expanded junction.
  bool contract = true;
};

struct D4Witness {
  OrientedGraph graph;
  std::array<Vertex, 4> sources{};
  std::array<Vertex, 4> middles{};
  std::array<Vertex, 4> sinks{};
  /// Vertices of t that survive as their own vertex map here; contracted ones share an image.
  std::vector<std::pair<Vertex, Vertex>> image;
};

/// Throws DomainError when the inputs break the preconditions (overlapping
/// triangles, a triangle without a source and sink, a junction that does not
/// run sink to source along arcs of t) and WitnessFailure when a contraction
/// step is refused or the result is not a D4 ring.
[[nodiscard]] D4Witness build_d4_witness(const Tournament& t, std::span<const Triangle, 4> triangles,
                                         std::span<const RingJunction, 4> junctions);

/// Connector form: junction i is the single arc connectors[i], sink of triangle i to source of i+1.
[[nodiscard]] D4Witness build_d4_witness(const Tournament& t, std::span<const Triangle, 4> triangles,
                                         std::span<const Arc, 4> connectors);

/// Source and sink of a transitive triangle in t, or nothing for a 3-cycle.
struct TriangleEnds {
  Vertex source;
  Vertex middle;
  Vertex sink;
};
[[nodiscard]] std::optional<TriangleEnds> triangle_ends(const Tournament& t, const Triangle& tri);

/// Structural check of a D4 ring given the lobe ends and middles.
[[nodiscard]] bool is_d4_ring(const OrientedGraph& g, const D4Witness& w);

}  // namespace tourlink
