#pragma once

// Certificate search: place a tournament into a catalogued embedding so that
// every catalogued link has an inconsistently oriented component and every
// catalogued knot is inconsistently oriented.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tourlink/catalogue.hpp"
#include "tourlink/digraph.hpp"
#include "tourlink/iso.hpp"

namespace tourlink {

enum class CertificateKind { embedding_labeling, apex_reduction };

struct Certificate {
  CertificateKind kind = CertificateKind::embedding_labeling;
  std::string catalogue;
  /// labeling[label] = tournament vertex carrying that embedding label. For an
  /// apex reduction it covers every vertex except the apex.
  std::vector<Vertex> labeling;
  std::optional<Vertex> apex;
  /// Found while searching the dual; the same labeling certifies both.
  bool via_dual = false;
};

/// True if the labeling kills every entry of the catalogue.
/// Throws DomainError if sizes differ or sigma is not a bijection.
[[nodiscard]] bool is_certified_labeling(const Tournament& t, std::span<const Vertex> sigma,
                                         const EmbeddingCatalogue& cat);

/// Re-checks a certificate against t from scratch.
[[nodiscard]] bool check_certificate(const Tournament& t, const Certificate& cert, const EmbeddingCatalogue& cat);

/// Vertex with in-degree or out-degree n-1, lowest id first.
[[nodiscard]] std::optional<Vertex> find_apex(const Tournament& t);

/// Searches all labelings with pruning; most constrained labels are placed first.
///
/// When t has one vertex more than the catalogue and allow_apex is set, the
/// search drops a full in- or out-degree vertex and certifies the remainder.
[[nodiscard]] std::optional<Certificate> find_certificate(const Tournament& t, const EmbeddingCatalogue& cat,
                                                          bool allow_apex = false);

/// Places the single knotted Hamiltonian cycle 1..7 of the Conway-Gordon
/// embedding: identity labeling, or the images of labels 6 and 7 swapped when
/// the identity image is consistent. Throws DomainError unless t has 7 vertices.
[[nodiscard]] Certificate cg_certificate(const Tournament& t);
/// True when the identity labeling already leaves 1..7 inconsistent.
[[nodiscard]] bool cg_identity_suffices(const Tournament& t);

/// The constrained seven-vertex tournaments left over by the FMellor case
/// analysis, one per isomorphism class, sorted by canonical form.
[[nodiscard]] std::vector<Tournament> residual_family();
/// The 16 raw candidates before deduplication.
[[nodiscard]] std::vector<Tournament> residual_candidates();

/// The labeling used for max in-degree 4..6 eight-vertex tournaments:
/// labels 1 and 4..8 sit so that 4->1, 5->1, 7->1, 8->1, 8->5 and 6->4.
/// Empty when t has no vertex of max in-degree in [4, 6].
[[nodiscard]] std::optional<std::vector<Vertex>> amt_proof_labeling(const Tournament& t);
/// The six arcs the proof labeling fixes, in label space (0-based).
[[nodiscard]] std::vector<Arc> amt_proof_arcs();

}  // namespace tourlink
