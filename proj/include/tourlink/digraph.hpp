#pragma once

// Oriented graphs and tournaments over vertices 0..n-1.
//
// Both types store one out-neighbour bit row per vertex. A Tournament always
// carries exactly one arc per unordered pair; an OrientedGraph carries at most
// one. All public vertex ids are 0-based; file formats and catalogue strings
// are 1-based and converted at the boundary.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tourlink {

using Vertex = int;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {

/// Square bit matrix; row u holds the out-neighbours of u.
class BitRows {
 public:
  BitRows() = default;
  explicit BitRows(int n);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] bool test(Vertex u, Vertex v) const {
    return (bits_[index(u, v)] >> (v & 63)) & 1U;
  }
  void set(Vertex u, Vertex v) { bits_[index(u, v)] |= bit(v); }
  void reset(Vertex u, Vertex v) { bits_[index(u, v)] &= ~bit(v); }

  [[nodiscard]] int row_count(Vertex u) const;
  [[nodiscard]] int column_count(Vertex v) const;
  /// Low 64 columns of row u. Only meaningful when n <= 64.
  [[nodiscard]] std::uint64_t row_word(Vertex u) const { return bits_[static_cast<std::size_t>(u) * words_]; }

  friend bool operator==(const BitRows&, const BitRows&) = default;

 private:
  [[nodiscard]] std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6);
  }
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// A partial tournament: at most one arc per unordered pair, no loops.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n);
  OrientedGraph(int n, const std::vector<Arc>& arcs);

  [[nodiscard]] int order() const { return rows_.size(); }
  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const;
  /// True if u and v are joined in either direction.
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  /// Throws DomainError on loops, out-of-range ids, or an existing reverse arc.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  [[nodiscard]] int out_degree(Vertex v) const;
  [[nodiscard]] int in_degree(Vertex v) const;
  [[nodiscard]] std::size_t arc_count() const;
  [[nodiscard]] std::vector<Arc> arcs() const;
  [[nodiscard]] std::vector<Vertex> out_neighbours(Vertex v) const;
  [[nodiscard]] std::vector<Vertex> in_neighbours(Vertex v) const;
  [[nodiscard]] std::vector<Vertex> neighbours(Vertex v) const;

  /// Graph induced on `keep`, renumbered in the order given.
  [[nodiscard]] OrientedGraph induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  detail::BitRows rows_;
};

class Tournament {
 public:
  Tournament() = default;

  /// Every arc runs from the lower to the higher index.
  static Tournament transitive(int n);
  /// Builds from a complete, conflict-free arc list; throws DomainError otherwise.
  static Tournament from_arcs(int n, const std::vector<Arc>& arcs);
  /// Throws DomainError unless every pair carries exactly one arc.
  static Tournament from_graph(const OrientedGraph& g);
  /// Bit k set <=> arc low->high on the k-th pair in colex order
  /// (0,1),(0,2),(1,2),(0,3),... . Requires n*(n-1)/2 <= 64.
  static Tournament from_colex_bits(int n, std::uint64_t bits);

  [[nodiscard]] int order() const { return rows_.size(); }
  /// u->v. Throws DomainError for u == v or ids out of range.
  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const;
  /// Same as has_arc without range checks; hot loops only.
  [[nodiscard]] bool beats(Vertex u, Vertex v) const { return rows_.test(u, v); }
  /// The single arc joining u and v.
  [[nodiscard]] Arc arc_direction(Vertex u, Vertex v) const;

  [[nodiscard]] int out_degree(Vertex v) const { return rows_.row_count(v); }
  [[nodiscard]] int in_degree(Vertex v) const { return order() - 1 - out_degree(v); }
  [[nodiscard]] std::vector<int> in_degrees() const;
  [[nodiscard]] std::vector<Arc> arcs() const;
  /// Out-neighbour mask of v; requires order() <= 64.
  [[nodiscard]] std::uint64_t out_mask(Vertex v) const { return rows_.row_word(v); }
  [[nodiscard]] std::uint64_t colex_bits() const;

  /// Points the {u,v} edge from u to v.
  void orient(Vertex u, Vertex v);

  [[nodiscard]] OrientedGraph as_graph() const;
  /// Sub-tournament induced on `keep`, renumbered in the order given.
  [[nodiscard]] Tournament induced(const std::vector<Vertex>& keep) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(int n);
  void check_pair(Vertex u, Vertex v) const;

  detail::BitRows rows_;
};

}  // namespace tourlink
