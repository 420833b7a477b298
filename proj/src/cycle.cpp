#include "tourlink/cycle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "tourlink/errors.hpp"

namespace tourlink {

CyclePattern::CyclePattern(std::vector<Vertex> verts) : verts_(std::move(verts)) {
  if (verts_.size() < 3) throw DomainError("a cycle needs at least three vertices");
  std::vector<Vertex> sorted = verts_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw DomainError("negative vertex in cycle");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("repeated vertex in cycle");
}

std::vector<Vertex> CyclePattern::canonical() const {
  const std::size_t k = verts_.size();
  const auto start = static_cast<std::size_t>(std::min_element(verts_.begin(), verts_.end()) - verts_.begin());
  std::vector<Vertex> fwd(k), bwd(k);
  for (std::size_t i = 0; i < k; ++i) {
    fwd[i] = verts_[(start + i) % k];
    bwd[i] = verts_[(start + k - i) % k];
  }
  return std::min(fwd, bwd);
}

bool CyclePattern::contains(Vertex v) const {
  return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

bool CyclePattern::disjoint_from(const CyclePattern& other) const {
  return std::none_of(verts_.begin(), verts_.end(), [&](Vertex v) { return other.contains(v); });
}

CyclePattern CyclePattern::mapped(std::span<const Vertex> image) const {
  std::vector<Vertex> out;
  out.reserve(verts_.size());
  for (Vertex v : verts_) {
    if (v >= static_cast<Vertex>(image.size())) throw DomainError("vertex map does not cover " + std::to_string(v));
    out.push_back(image[static_cast<std::size_t>(v)]);
  }
  return CyclePattern(std::move(out));
}

namespace {

template <class Host>
void check_labels(const Host& h, const CyclePattern& p) {
  for (Vertex v : p.verts())
    if (v >= h.order()) throw DomainError("cycle vertex " + std::to_string(v) + " out of range");
}

template <class Host>
bool runs_forward(const Host& h, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!h.has_arc(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

template <class Host>
bool runs_backward(const Host& h, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!h.has_arc(c[(i + 1) % c.size()], c[i])) return false;
  return true;
}

template <class Host>
std::optional<std::vector<Vertex>> traversal(const Host& h, const CyclePattern& p) {
  check_labels(h, p);
  const auto& c = p.verts();
  if (runs_forward(h, c)) return c;
  if (runs_backward(h, c)) return std::vector<Vertex>(c.rbegin(), c.rend());
  return std::nullopt;
}

}  // namespace

bool is_consistent(const Tournament& t, const CyclePattern& p) { return traversal(t, p).has_value(); }
bool is_consistent(const OrientedGraph& g, const CyclePattern& p) { return traversal(g, p).has_value(); }

std::optional<DirectedCycle> directed_traversal(const Tournament& t, const CyclePattern& p) {
  if (auto c = traversal(t, p)) return DirectedCycle(std::move(*c));
  return std::nullopt;
}

std::optional<DirectedCycle> directed_traversal(const OrientedGraph& g, const CyclePattern& p) {
  if (auto c = traversal(g, p)) return DirectedCycle(std::move(*c));
  return std::nullopt;
}

bool killed_by_partial(std::span<const Arc> arcs, const CyclePattern& p) {
  std::set<std::pair<Vertex, Vertex>> present;
  for (const Arc& a : arcs) {
    if (a.from == a.to) throw DomainError("self-loop in partial orientation");
    if (present.contains({a.to, a.from})) throw DomainError("partial orientation has a pair in both directions");
    present.insert({a.from, a.to});
  }
  const auto& c = p.verts();
  bool forward_blocked = false;
  bool backward_blocked = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex u = c[i];
    const Vertex v = c[(i + 1) % c.size()];
    if (present.contains({v, u})) forward_blocked = true;
    if (present.contains({u, v})) backward_blocked = true;
  }
  return forward_blocked && backward_blocked;
}

}  // namespace tourlink
