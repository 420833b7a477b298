#include "tourlink/iso.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "tourlink/errors.hpp"
#include "tourlink/parallel.hpp"
#include "tourlink/surgery.hpp"

namespace tourlink {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Branch-and-bound search for the least column sequence. Column j of an
// arrangement holds, most significant first, "slot i beats slot j" for i < j.
// Concatenating columns 1..n-1 gives the colex pair bitstring, so comparing
// column by column is comparing the bitstrings.
class Canonicaliser {
 public:
  explicit Canonicaliser(const Tournament& t) : n_(t.order()) {
    for (Vertex v = 0; v < n_; ++v) out_[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(t.out_mask(v));
    best_.fill(kUnset);
  }

  CanonicalLabeling run() {
    search(0, 0U);
    CanonicalLabeling result;
    result.form.n = n_;
    std::uint64_t bits = 0;
    for (int j = 1; j < n_; ++j) bits = (bits << j) | best_[static_cast<std::size_t>(j)];
    result.form.bits = bits;
    result.position.resize(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) result.position[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(pos)])] = pos;
    return result;
  }

 private:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  void search(int j, std::uint32_t used) {
    if (j == n_) {
      if (!have_perm_) {
        best_perm_ = perm_;
        have_perm_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used & (1U << v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i)
        col = (col << 1) | ((out_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> v) & 1U);
      std::uint32_t& best = best_[static_cast<std::size_t>(j)];
      if (col > best) continue;
      if (col < best) {
        best = col;
        for (int k = j + 1; k < n_; ++k) best_[static_cast<std::size_t>(k)] = kUnset;
        have_perm_ = false;
      }
      perm_[static_cast<std::size_t>(j)] = v;
      search(j + 1, used | (1U << v));
    }
  }

  int n_;
  std::array<std::uint32_t, kMaxCanonicalOrder> out_{};
  std::array<Vertex, kMaxCanonicalOrder> perm_{};
  std::array<Vertex, kMaxCanonicalOrder> best_perm_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_{};
  bool have_perm_ = false;
};

}  // namespace

Tournament CanonicalForm::tournament() const {
  const int p = pair_count(n);
  // Reverse the pair order into the LSB-first colex encoding.
  std::uint64_t colex = 0;
  for (int k = 0; k < p; ++k)
    if ((bits >> (p - 1 - k)) & 1U) colex |= std::uint64_t{1} << k;
  return Tournament::from_colex_bits(n, colex);
}

std::string CanonicalForm::to_string() const {
  const int p = pair_count(n);
  std::string s(static_cast<std::size_t>(p), '0');
  for (int k = 0; k < p; ++k)
    if ((bits >> (p - 1 - k)) & 1U) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

CanonicalForm CanonicalForm::from_string(const std::string& s) {
  int n = 1;
  while (pair_count(n) < static_cast<int>(s.size())) ++n;
  if (pair_count(n) != static_cast<int>(s.size()) || n > kMaxCanonicalOrder)
    throw ParseError("canonical form length " + std::to_string(s.size()) + " is not a pair count");
  CanonicalForm f{n, 0};
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("canonical form must be a 0/1 string");
    f.bits = (f.bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return f;
}

CanonicalLabeling canonical_labeling(const Tournament& t) {
  if (t.order() > kMaxCanonicalOrder)
    throw UnsupportedSize("canonical forms are limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  return Canonicaliser(t).run();
}

CanonicalForm canonical_form(const Tournament& t) { return canonical_labeling(t).form; }

bool isomorphic(const Tournament& a, const Tournament& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::vector<CanonicalForm> enumerate_canonical_forms(int n, int jobs) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder)
    throw UnsupportedSize("enumeration supports 3..8 vertices, got " + std::to_string(n));

  std::vector<CanonicalForm> level{CanonicalForm{1, 0}};
  for (int m = 2; m <= n; ++m) {
    const std::size_t extensions = std::size_t{1} << (m - 1);
    std::vector<std::vector<CanonicalForm>> found(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t r) {
      const std::vector<Arc> base_arcs = level[r].tournament().arcs();
      auto& out = found[r];
      out.reserve(extensions);
      for (std::size_t mask = 0; mask < extensions; ++mask) {
        OrientedGraph grown(m, base_arcs);
        for (Vertex i = 0; i + 1 < m; ++i) {
          if ((mask >> i) & 1U) {
            grown.add_arc(i, m - 1);
          } else {
            grown.add_arc(m - 1, i);
          }
        }
        out.push_back(canonical_form(Tournament::from_graph(grown)));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<CanonicalForm> next;
    for (auto& f : found) next.insert(next.end(), f.begin(), f.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

std::vector<Tournament> enumerate_tournaments(int n, int jobs) {
  std::vector<Tournament> out;
  for (const CanonicalForm& f : enumerate_canonical_forms(n, jobs)) out.push_back(f.tournament());
  return out;
}

void for_each_labeling(int n, const std::function<bool(const std::vector<Vertex>&)>& fn) {
  if (n < 0 || n > kMaxEnumerationOrder) throw UnsupportedSize("labelings are limited to 8 vertices");
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!fn(p)) return;
  } while (std::next_permutation(p.begin(), p.end()));
}

std::vector<std::vector<Vertex>> all_labelings(int n) {
  std::vector<std::vector<Vertex>> out;
  for_each_labeling(n, [&](const std::vector<Vertex>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace tourlink
