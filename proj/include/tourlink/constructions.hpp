#pragma once

// Generators for the explicit tournaments and their structural validators.
//
// Every generator fixes a set of construction arcs, completes the remaining
// pairs low -> high, and names the vertices the arguments refer to. Validators
// look vertices up by role name, so they run unchanged on any tournament laid
// out the same way (a file, or a negative control).

#include <map>
#include <string>
#include <vector>

#include "tourlink/d4.hpp"
#include "tourlink/digraph.hpp"

namespace tourlink {

/// Orientation a constituent copy uses for a shared slot whose stored arc may differ.
struct CopyConvention {
  std::string copy;
  Arc arc;
};

struct NamedConstruction {
  std::string name;
  Tournament tournament;
  /// Arcs fixed by the construction, before completion.
  OrientedGraph construction;
  std::map<std::string, Vertex> roles;
  std::vector<CopyConvention> conventions;

  /// Throws DomainError for an unknown role.
  [[nodiscard]] Vertex role(const std::string& name) const;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Validation {
  std::string construction;
  std::vector<Check> checks;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] const Check* find(const std::string& name) const;
};

[[nodiscard]] NamedConstruction build_il8();
[[nodiscard]] NamedConstruction build_ik12();
[[nodiscard]] NamedConstruction build_3linked23();
/// k = 4 glues 3 copies of the 23-vertex tournament in a ring, k = 5 glues 7.
[[nodiscard]] NamedConstruction build_klinked(int k);
[[nodiscard]] NamedConstruction build_tprime8();
/// (2n-3)^2 copies of the 8-vertex block with b -> next a arcs. n >= 2.
[[nodiscard]] NamedConstruction build_nlinked(int n);
[[nodiscard]] NamedConstruction build_tprime14();
[[nodiscard]] NamedConstruction build_linkknot107();
[[nodiscard]] NamedConstruction build_dlp14();

/// il8, ik12, l3-23, l4-66, l5-154, tprime8, nlinked, tprime14, linkknot107, dlp14.
[[nodiscard]] std::vector<std::string> construction_names();
/// `n` is only read by nlinked. Throws DomainError for an unknown name.
[[nodiscard]] NamedConstruction build_construction(const std::string& name, int n = 3);
/// Vertex count the construction must have.
[[nodiscard]] int expected_order(const std::string& name, int n = 3);

/// Runs the generic checks (order, construction arcs kept, injective roles)
/// and the construction-specific validator named by c.name.
[[nodiscard]] Validation validate(const NamedConstruction& c, int n = 3);

/// The same validator applied to another tournament with the reference layout
/// of `name`: used for files and for negative controls.
[[nodiscard]] Validation validate_as(const std::string& name, const Tournament& t, int n = 3);

/// Ordered pairs of consistent triangles (x,a_i,b_j), (y,a_k,b_l) with i != k, j != l.
[[nodiscard]] int il8_linked_triangle_pairs(const Tournament& t, const std::map<std::string, Vertex>& roles);

struct RingFamily {
  std::array<Triangle, 4> triangles;
  std::array<RingJunction, 4> junctions;
};

/// Every admissible (T1, T2, T3, T4, junction) choice in the 12-vertex
/// construction: T1/T3 a disjoint triangle pair of the K6 part with y3 in T3,
/// T4 = y3 a_m b_n, T2 = a b b' inside the complementary 4-cycle.
[[nodiscard]] std::vector<RingFamily> ik12_ring_families(const Tournament& t, const std::map<std::string, Vertex>& roles);
/// As above for the 14-vertex block, with T4 = y3' a_m b_n and the y3 -> alpha
/// -> y3' junction kept as an expanded path.
[[nodiscard]] std::vector<RingFamily> tprime14_ring_families(const Tournament& t,
                                                             const std::map<std::string, Vertex>& roles);

}  // namespace tourlink
