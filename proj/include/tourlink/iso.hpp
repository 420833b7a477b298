#pragma once

// Canonical forms and isomorph-free enumeration of small tournaments.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tourlink/digraph.hpp"

namespace tourlink {

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMinEnumerationOrder = 3;
inline constexpr int kMaxEnumerationOrder = 8;

/// Lexicographically least orientation bitstring over all relabellings.
///
/// The bitstring lists the pairs in colex order (0,1),(0,2),(1,2),(0,3),...
/// with 1 meaning "lower position beats higher position". It is packed with
/// the first pair in the most significant used bit, so integer order and
/// string order agree.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  [[nodiscard]] Tournament tournament() const;
  /// Pair bits as a '0'/'1' string in colex pair order.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] static CanonicalForm from_string(const std::string& s);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] = slot of vertex v in the canonical arrangement, so
  /// relabel(t, position) == form.tournament().
  std::vector<Vertex> position;
};

/// Throws UnsupportedSize for order() > kMaxCanonicalOrder.
[[nodiscard]] CanonicalForm canonical_form(const Tournament& t);
[[nodiscard]] CanonicalLabeling canonical_labeling(const Tournament& t);
[[nodiscard]] bool isomorphic(const Tournament& a, const Tournament& b);

/// One representative per isomorphism class, sorted by canonical form.
/// Each representative is form.tournament() of its class.
/// Throws UnsupportedSize unless 3 <= n <= 8.
[[nodiscard]] std::vector<Tournament> enumerate_tournaments(int n, int jobs = 1);
[[nodiscard]] std::vector<CanonicalForm> enumerate_canonical_forms(int n, int jobs = 1);

/// All n! permutations of 0..n-1 in lexicographic order. n <= 8.
[[nodiscard]] std::vector<std::vector<Vertex>> all_labelings(int n);
/// Streams the same permutations without materialising them; stop by returning false.
void for_each_labeling(int n, const std::function<bool(const std::vector<Vertex>&)>& fn);

}  // namespace tourlink
