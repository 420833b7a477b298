#include "tourlink/digraph.hpp"

#include <bit>
#include <string>

#include "tourlink/errors.hpp"

namespace tourlink {

namespace detail {

BitRows::BitRows(int n)
    : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

int BitRows::row_count(Vertex u) const {
  int c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(bits_[static_cast<std::size_t>(u) * words_ + w]);
  return c;
}

int BitRows::column_count(Vertex v) const {
  int c = 0;
  for (Vertex u = 0; u < n_; ++u) c += test(u, v) ? 1 : 0;
  return c;
}

}  // namespace detail

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

// ---------------------------------------------------------------- OrientedGraph

OrientedGraph::OrientedGraph(int n) : rows_(n) {
  if (n < 0) throw DomainError("negative vertex count");
}

OrientedGraph::OrientedGraph(int n, const std::vector<Arc>& arcs) : OrientedGraph(n) {
  for (const Arc& a : arcs) add_arc(a.from, a.to);
}

void OrientedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

bool OrientedGraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && rows_.test(u, v);
}

void OrientedGraph::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at " + std::to_string(u));
  if (rows_.test(v, u)) throw DomainError("pair " + pair_text(u, v) + " already oriented the other way");
  rows_.set(u, v);
}

void OrientedGraph::remove_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_.reset(u, v);
}

int OrientedGraph::out_degree(Vertex v) const {
  check_vertex(v);
  return rows_.row_count(v);
}

int OrientedGraph::in_degree(Vertex v) const {
  check_vertex(v);
  return rows_.column_count(v);
}

std::size_t OrientedGraph::arc_count() const {
  std::size_t c = 0;
  for (Vertex u = 0; u < order(); ++u) c += static_cast<std::size_t>(rows_.row_count(u));
  return c;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = 0; v < order(); ++v)
      if (rows_.test(u, v)) out.push_back({u, v});
  return out;
}

std::vector<Vertex> OrientedGraph::out_neighbours(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < order(); ++w)
    if (rows_.test(v, w)) out.push_back(w);
  return out;
}

std::vector<Vertex> OrientedGraph::in_neighbours(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < order(); ++w)
    if (rows_.test(w, v)) out.push_back(w);
  return out;
}

std::vector<Vertex> OrientedGraph::neighbours(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < order(); ++w)
    if (rows_.test(v, w) || rows_.test(w, v)) out.push_back(w);
  return out;
}

OrientedGraph OrientedGraph::induced(const std::vector<Vertex>& keep) const {
  OrientedGraph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) check_vertex(keep[i]);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (i != j && rows_.test(keep[i], keep[j])) g.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

// ------------------------------------------------------------------- Tournament

Tournament::Tournament(int n) : rows_(n) {
  if (n < 1) throw DomainError("tournament needs at least one vertex");
}

Tournament Tournament::transitive(int n) {
  Tournament t(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) t.rows_.set(u, v);
  return t;
}

Tournament Tournament::from_arcs(int n, const std::vector<Arc>& arcs) {
  return from_graph(OrientedGraph(n, arcs));
}

Tournament Tournament::from_graph(const OrientedGraph& g) {
  Tournament t(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_arc(u, v)) {
        t.rows_.set(u, v);
      } else if (g.has_arc(v, u)) {
        t.rows_.set(v, u);
      } else {
        throw DomainError("pair " + pair_text(u, v) + " carries no arc");
      }
    }
  }
  return t;
}

Tournament Tournament::from_colex_bits(int n, std::uint64_t bits) {
  if (n * (n - 1) / 2 > 64) throw UnsupportedSize("colex encoding limited to 11 vertices");
  Tournament t(n);
  int k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((bits >> k) & 1U) {
        t.rows_.set(i, j);
      } else {
        t.rows_.set(j, i);
      }
    }
  }
  return t;
}

void Tournament::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order())
    throw DomainError("pair " + pair_text(u, v) + " out of range");
  if (u == v) throw DomainError("no arc joins a vertex to itself");
}

bool Tournament::has_arc(Vertex u, Vertex v) const {
  check_pair(u, v);
  return rows_.test(u, v);
}

Arc Tournament::arc_direction(Vertex u, Vertex v) const {
  return has_arc(u, v) ? Arc{u, v} : Arc{v, u};
}

std::vector<int> Tournament::in_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(order()));
  for (Vertex v = 0; v < order(); ++v) d[static_cast<std::size_t>(v)] = in_degree(v);
  return d;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(order()) * static_cast<std::size_t>(order() - 1) / 2);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = 0; v < order(); ++v)
      if (rows_.test(u, v)) out.push_back({u, v});
  return out;
}

std::uint64_t Tournament::colex_bits() const {
  if (order() * (order() - 1) / 2 > 64) throw UnsupportedSize("colex encoding limited to 11 vertices");
  std::uint64_t bits = 0;
  int k = 0;
  for (Vertex j = 1; j < order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (rows_.test(i, j)) bits |= std::uint64_t{1} << k;
  return bits;
}

void Tournament::orient(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_.reset(v, u);
  rows_.set(u, v);
}

OrientedGraph Tournament::as_graph() const { return OrientedGraph(order(), arcs()); }

Tournament Tournament::induced(const std::vector<Vertex>& keep) const {
  Tournament t(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_arc(keep[i], keep[j])) {
        t.rows_.set(static_cast<Vertex>(i), static_cast<Vertex>(j));
      } else {
        t.rows_.set(static_cast<Vertex>(j), static_cast<Vertex>(i));
      }
    }
  return t;
}

}  // namespace tourlink
