#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tourlink/digraph.hpp"

namespace tourlink {

/// An unoriented simple cycle, written as a cyclic vertex sequence.
///
/// Two patterns are equal when one is a rotation or reflection of the other;
/// canonical() is the lexicographically least such sequence, which starts at
/// the smallest vertex.
class CyclePattern {
 public:
  CyclePattern() = default;
  /// Throws DomainError for fewer than three vertices, repeats or negative ids.
  explicit CyclePattern(std::vector<Vertex> verts);

  [[nodiscard]] const std::vector<Vertex>& verts() const { return verts_; }
  [[nodiscard]] std::size_t length() const { return verts_.size(); }
  [[nodiscard]] std::vector<Vertex> canonical() const;
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] bool disjoint_from(const CyclePattern& other) const;
  /// Image under a vertex map: label v becomes image[v].
  [[nodiscard]] CyclePattern mapped(std::span<const Vertex> image) const;

  friend bool operator==(const CyclePattern& a, const CyclePattern& b) { return a.canonical() == b.canonical(); }
  friend bool operator<(const CyclePattern& a, const CyclePattern& b) { return a.canonical() < b.canonical(); }

 private:
  std::vector<Vertex> verts_;
};

/// A cycle with a traversal direction; consecutive pairs are arcs of the host.
class DirectedCycle {
 public:
  [[nodiscard]] const std::vector<Vertex>& verts() const { return verts_; }
  [[nodiscard]] CyclePattern pattern() const { return CyclePattern(verts_); }

  friend std::optional<DirectedCycle> directed_traversal(const Tournament& t, const CyclePattern& p);
  friend std::optional<DirectedCycle> directed_traversal(const OrientedGraph& g, const CyclePattern& p);

 private:
  explicit DirectedCycle(std::vector<Vertex> verts) : verts_(std::move(verts)) {}
  std::vector<Vertex> verts_;
};

/// True if one of the two traversal directions of p uses only forward arcs.
/// Throws DomainError if p names a vertex outside the host.
[[nodiscard]] bool is_consistent(const Tournament& t, const CyclePattern& p);
[[nodiscard]] bool is_consistent(const OrientedGraph& g, const CyclePattern& p);

/// The consistent traversal of p, if any (forward direction preferred).
[[nodiscard]] std::optional<DirectedCycle> directed_traversal(const Tournament& t, const CyclePattern& p);
[[nodiscard]] std::optional<DirectedCycle> directed_traversal(const OrientedGraph& g, const CyclePattern& p);

/// True when every completion of the partial orientation leaves p
/// inconsistent, i.e. each traversal direction is contradicted by some arc.
/// Throws DomainError if the arc set orients a pair both ways.
[[nodiscard]] bool killed_by_partial(std::span<const Arc> arcs, const CyclePattern& p);

}  // namespace tourlink
