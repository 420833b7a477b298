#include "tourlink/certificate.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tourlink/cycle.hpp"
#include "tourlink/errors.hpp"
#include "tourlink/surgery.hpp"

namespace tourlink {

namespace {

constexpr int kMaxSearchOrder = 16;

// Catalogue flattened for the labeling search. Labels are placed in `order`;
// an entry is judged at the depth where its last label is placed.
struct CompiledCatalogue {
  int n = 0;
  std::vector<std::vector<int>> patterns;
  std::vector<std::vector<int>> entries;  // pattern indices; one (knot) or two (link)
  std::vector<int> order;
  std::vector<std::vector<int>> judged_at;  // depth -> entry indices

  explicit CompiledCatalogue(const EmbeddingCatalogue& cat) : n(cat.order()) {
    auto add = [&](const CyclePattern& p) {
      patterns.emplace_back(p.verts().begin(), p.verts().end());
      return static_cast<int>(patterns.size()) - 1;
    };
    for (const auto& l : cat.links()) entries.push_back({add(l.first), add(l.second)});
    for (const auto& k : cat.knots()) entries.push_back({add(k)});

    // Most constrained first: labels in the most entries go first, ties by label.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    for (const auto& e : entries) {
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      for (int p : e)
        for (int v : patterns[static_cast<std::size_t>(p)]) in[static_cast<std::size_t>(v)] = 1;
      for (int v = 0; v < n; ++v) weight[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(v)];
    }
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)]; });

    std::vector<int> depth_of(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) depth_of[static_cast<std::size_t>(order[static_cast<std::size_t>(d)])] = d;
    judged_at.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      int last = 0;
      for (int p : entries[e])
        for (int v : patterns[static_cast<std::size_t>(p)]) last = std::max(last, depth_of[static_cast<std::size_t>(v)]);
      judged_at[static_cast<std::size_t>(last)].push_back(static_cast<int>(e));
    }
  }
};

// Out-neighbour masks of the host, indexed by host vertex.
using Masks = std::array<std::uint32_t, kMaxSearchOrder>;

bool pattern_consistent(const std::vector<int>& pat, const Vertex* image, const Masks& out) {
  const std::size_t k = pat.size();
  bool fwd = true;
  bool bwd = true;
  for (std::size_t i = 0; i < k && (fwd || bwd); ++i) {
    const auto a = static_cast<std::size_t>(image[pat[i]]);
    const auto b = static_cast<std::size_t>(image[pat[(i + 1) % k]]);
    if ((out[a] >> b) & 1U) {
      bwd = false;
    } else {
      fwd = false;
    }
  }
  return fwd || bwd;
}

bool entry_killed(const CompiledCatalogue& cc, int entry, const Vertex* image, const Masks& out) {
  for (int p : cc.entries[static_cast<std::size_t>(entry)])
    if (!pattern_consistent(cc.patterns[static_cast<std::size_t>(p)], image, out)) return true;
  return false;
}

class LabelingSearch {
 public:
  LabelingSearch(const CompiledCatalogue& cc, std::span<const Vertex> hosts, const Tournament& t)
      : cc_(cc), hosts_(hosts.begin(), hosts.end()) {
    for (Vertex v = 0; v < t.order(); ++v) out_[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(t.out_mask(v));
  }

  std::optional<std::vector<Vertex>> run() {
    if (!place(0)) return std::nullopt;
    return std::vector<Vertex>(image_.begin(), image_.begin() + cc_.n);
  }

 private:
  bool place(int depth) {
    if (depth == cc_.n) return true;
    const int label = cc_.order[static_cast<std::size_t>(depth)];
    for (Vertex h : hosts_) {
      if (used_ & (1U << h)) continue;
      image_[static_cast<std::size_t>(label)] = h;
      bool alive = true;
      for (int e : cc_.judged_at[static_cast<std::size_t>(depth)]) {
        if (!entry_killed(cc_, e, image_.data(), out_)) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      used_ |= 1U << h;
      if (place(depth + 1)) return true;
      used_ &= ~(1U << h);
    }
    return false;
  }

  const CompiledCatalogue& cc_;
  std::vector<Vertex> hosts_;
  Masks out_{};
  std::array<Vertex, kMaxSearchOrder> image_{};
  std::uint32_t used_ = 0;
};

void require_bijection(std::span<const Vertex> sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw DomainError("labeling size does not match the catalogue");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw DomainError("labeling is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Every entry killed under an injective labeling into t.
bool kills_all(const Tournament& t, std::span<const Vertex> sigma, const EmbeddingCatalogue& cat) {
  for (const auto& l : cat.links())
    if (is_consistent(t, l.first.mapped(sigma)) && is_consistent(t, l.second.mapped(sigma))) return false;
  for (const auto& k : cat.knots())
    if (is_consistent(t, k.mapped(sigma))) return false;
  return true;
}

std::optional<std::vector<Vertex>> search_labeling(const Tournament& t, std::span<const Vertex> hosts,
                                                   const EmbeddingCatalogue& cat) {
  if (t.order() > kMaxSearchOrder) throw UnsupportedSize("certificate search is limited to 16 vertices");
  const CompiledCatalogue cc(cat);
  return LabelingSearch(cc, hosts, t).run();
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

bool is_certified_labeling(const Tournament& t, std::span<const Vertex> sigma, const EmbeddingCatalogue& cat) {
  if (t.order() != cat.order()) throw DomainError("tournament and catalogue sizes differ");
  require_bijection(sigma, t.order());
  return kills_all(t, sigma, cat);
}

std::optional<Vertex> find_apex(const Tournament& t) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.in_degree(v) == t.order() - 1 || t.out_degree(v) == t.order() - 1) return v;
  return std::nullopt;
}

bool check_certificate(const Tournament& t, const Certificate& cert, const EmbeddingCatalogue& cat) {
  if (cert.kind == CertificateKind::embedding_labeling) {
    return t.order() == cat.order() && is_certified_labeling(t, cert.labeling, cat);
  }
  if (!cert.apex || t.order() != cat.order() + 1) return false;
  const Vertex apex = *cert.apex;
  if (apex < 0 || apex >= t.order()) return false;
  if (t.in_degree(apex) != t.order() - 1 && t.out_degree(apex) != t.order() - 1) return false;
  if (static_cast<int>(cert.labeling.size()) != cat.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
  for (Vertex v : cert.labeling) {
    if (v < 0 || v >= t.order() || v == apex || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return kills_all(t, cert.labeling, cat);
}

std::optional<Certificate> find_certificate(const Tournament& t, const EmbeddingCatalogue& cat, bool allow_apex) {
  if (t.order() == cat.order()) {
    auto sigma = search_labeling(t, all_vertices(t.order()), cat);
    if (!sigma) return std::nullopt;
    return Certificate{CertificateKind::embedding_labeling, cat.name(), std::move(*sigma), std::nullopt, false};
  }
  if (allow_apex && t.order() == cat.order() + 1) {
    const auto apex = find_apex(t);
    if (!apex) return std::nullopt;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < t.order(); ++v)
      if (v != *apex) rest.push_back(v);
    auto sigma = search_labeling(t, rest, cat);
    if (!sigma) return std::nullopt;
    return Certificate{CertificateKind::apex_reduction, cat.name(), std::move(*sigma), apex, false};
  }
  return std::nullopt;
}

// ------------------------------------------------------------- Conway-Gordon

namespace {

const CyclePattern& hamiltonian_1_to_7() {
  static const CyclePattern c({0, 1, 2, 3, 4, 5, 6});
  return c;
}

}  // namespace

bool cg_identity_suffices(const Tournament& t) {
  if (t.order() != 7) throw DomainError("Conway-Gordon placement needs 7 vertices");
  return !is_consistent(t, hamiltonian_1_to_7());
}

Certificate cg_certificate(const Tournament& t) {
  Certificate cert{CertificateKind::embedding_labeling, "CGK7", all_vertices(7), std::nullopt, false};
  if (!cg_identity_suffices(t)) std::swap(cert.labeling[5], cert.labeling[6]);
  return cert;
}

// ------------------------------------------------------------ residual family

std::vector<Tournament> residual_candidates() {
  // Labels 1..7 shifted down by one.
  auto a = [](int from, int to) { return Arc{from - 1, to - 1}; };
  const std::vector<Arc> fixed = {a(1, 7), a(4, 7), a(5, 7), a(6, 7), a(7, 2), a(7, 3), a(4, 2), a(4, 3), a(2, 1),
                                  a(2, 5), a(2, 6), a(3, 1), a(3, 5), a(3, 6), a(5, 4), a(1, 4), a(6, 4)};
  const std::array<std::pair<int, int>, 3> triangle = {{{1, 5}, {1, 6}, {5, 6}}};
  std::vector<Tournament> out;
  for (int edge23 = 0; edge23 < 2; ++edge23) {
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<Arc> arcs = fixed;
      arcs.push_back(edge23 == 0 ? a(2, 3) : a(3, 2));
      for (int k = 0; k < 3; ++k) {
        const auto [u, v] = triangle[static_cast<std::size_t>(k)];
        arcs.push_back(((mask >> k) & 1) ? a(v, u) : a(u, v));
      }
      out.push_back(Tournament::from_arcs(7, arcs));
    }
  }
  return out;
}

std::vector<Tournament> residual_family() {
  std::vector<std::pair<CanonicalForm, Tournament>> keyed;
  for (auto& t : residual_candidates()) keyed.emplace_back(canonical_form(t), std::move(t));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Tournament> out;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    if (i == 0 || !(keyed[i].first == keyed[i - 1].first)) out.push_back(keyed[i].second);
  return out;
}

// ------------------------------------------------------- AMT proof labeling

std::vector<Arc> amt_proof_arcs() {
  return {{3, 0}, {4, 0}, {6, 0}, {7, 0}, {7, 4}, {5, 3}};
}

std::optional<std::vector<Vertex>> amt_proof_labeling(const Tournament& t) {
  if (t.order() != 8) throw DomainError("the AMT proof labeling needs 8 vertices");
  Vertex top = 0;
  for (Vertex v = 1; v < 8; ++v)
    if (t.in_degree(v) > t.in_degree(top)) top = v;
  const int d = t.in_degree(top);
  if (d < 4 || d > 6) return std::nullopt;

  std::vector<Vertex> sigma(8, -1);
  std::vector<char> used(8, 0);
  auto take = [&](int label, Vertex v) {
    sigma[static_cast<std::size_t>(label - 1)] = v;
    used[static_cast<std::size_t>(v)] = 1;
  };
  take(1, top);

  Vertex six = -1;
  for (Vertex v = 0; v < 8 && six < 0; ++v)
    if (v != top && t.beats(top, v)) six = v;
  take(6, six);

  std::vector<Vertex> w;  // in-neighbours of the top vertex
  for (Vertex v = 0; v < 8; ++v)
    if (v != top && t.beats(v, top)) w.push_back(v);
  // Some in-neighbour is beaten by six, else six would out-rank top in in-degree.
  const auto four = std::find_if(w.begin(), w.end(), [&](Vertex v) { return t.beats(six, v); });
  if (four == w.end()) return std::nullopt;
  take(4, *four);
  w.erase(four);

  const Vertex p = w[0];
  const Vertex q = w[1];
  if (t.beats(p, q)) {
    take(8, p);
    take(5, q);
  } else {
    take(8, q);
    take(5, p);
  }
  take(7, w[2]);

  int label = 2;
  for (Vertex v = 0; v < 8; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    take(label, v);
    label = 3;
  }
  return sigma;
}

}  // namespace tourlink
