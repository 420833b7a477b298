#pragma once

// Exhaustive verification over every isomorphism class of a given order.

#include <optional>
#include <string>
#include <vector>

#include "tourlink/catalogue.hpp"
#include "tourlink/certificate.hpp"
#include "tourlink/iso.hpp"

namespace tourlink {

struct VerifyPolicy {
  /// Try the dual when the tournament itself yields no labeling.
  bool search_dual = true;
  /// Catalogue for apex reductions (one vertex fewer than the main catalogue).
  std::optional<EmbeddingCatalogue> apex_catalogue;
  /// Match leftovers against residual_family() up to isomorphism and duality.
  bool audit_residual = false;
  /// Also run the two-step Conway-Gordon placement on every class.
  bool cg_two_step = false;
  int jobs = 1;
};

struct ClassOutcome {
  CanonicalForm form;
  int max_in_degree = 0;
  int max_out_degree = 0;
  std::optional<Certificate> certificate;
  /// Leftover isomorphic (possibly after dualising) to a residual family member.
  bool residual_match = false;
  /// Index into residual_family() when residual_match holds.
  std::optional<int> residual_index;
  std::optional<bool> cg_two_step_ok;

  [[nodiscard]] bool leftover() const { return !certificate.has_value(); }
};

struct VerificationReport {
  std::string target;
  std::string catalogue;
  int n = 0;
  std::vector<ClassOutcome> outcomes;  ///< canonical order
  double elapsed_ms = 0;               ///< not serialised unless asked for

  [[nodiscard]] std::size_t certified() const;
  [[nodiscard]] std::size_t apex_reductions() const;
  [[nodiscard]] std::size_t leftovers() const;
  [[nodiscard]] std::size_t unexplained_leftovers() const;
  [[nodiscard]] std::size_t cg_two_step_failures() const;
  [[nodiscard]] bool success() const { return unexplained_leftovers() == 0 && cg_two_step_failures() == 0; }
};

/// Certificate for one tournament under the policy: apex reduction first when
/// an apex catalogue is configured and t has an apex, then a direct labeling of
/// t, then of dual(t).
[[nodiscard]] std::optional<Certificate> certify(const Tournament& t, const EmbeddingCatalogue& cat,
                                                 const VerifyPolicy& policy);

/// Runs every isomorphism class on n vertices (n in {7, 8}).
[[nodiscard]] VerificationReport verify_class(int n, const EmbeddingCatalogue& cat, const VerifyPolicy& policy);

/// Named targets: "k7-linkless", "k7-knotless", "k8-knotless".
[[nodiscard]] std::vector<std::string> verify_targets();
/// Throws DomainError for an unknown target.
[[nodiscard]] VerificationReport verify_target(const std::string& target, int jobs = 1);

/// For the FMellor audit: index into residual_family() of a member isomorphic
/// to t or to dual(t).
[[nodiscard]] std::optional<int> match_residual(const Tournament& t);

/// Linkless check for a single 7-vertex tournament: a FMellor labeling of t or
/// its dual, or membership of the residual family up to duality.
[[nodiscard]] bool seven_vertex_linkless_witness(const Tournament& t);

}  // namespace tourlink
