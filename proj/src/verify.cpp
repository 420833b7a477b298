#include "tourlink/verify.hpp"

#include <algorithm>
#include <chrono>

#include "tourlink/errors.hpp"
#include "tourlink/parallel.hpp"
#include "tourlink/surgery.hpp"

namespace tourlink {

std::size_t VerificationReport::certified() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.leftover(); }));
}

std::size_t VerificationReport::apex_reductions() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) {
    return o.certificate && o.certificate->kind == CertificateKind::apex_reduction;
  }));
}

std::size_t VerificationReport::leftovers() const { return outcomes.size() - certified(); }

std::size_t VerificationReport::unexplained_leftovers() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.leftover() && !o.residual_match; }));
}

std::size_t VerificationReport::cg_two_step_failures() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                [](const auto& o) { return o.cg_two_step_ok && !*o.cg_two_step_ok; }));
}

std::optional<Certificate> certify(const Tournament& t, const EmbeddingCatalogue& cat, const VerifyPolicy& policy) {
  if (policy.apex_catalogue && find_apex(t)) {
    if (auto c = find_certificate(t, *policy.apex_catalogue, true)) return c;
  }
  if (auto c = find_certificate(t, cat)) return c;
  if (policy.search_dual) {
    if (auto c = find_certificate(dual(t), cat)) {
      c->via_dual = true;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<int> match_residual(const Tournament& t) {
  static const std::vector<std::pair<CanonicalForm, CanonicalForm>> forms = [] {
    std::vector<std::pair<CanonicalForm, CanonicalForm>> f;
    for (const auto& r : residual_family()) f.emplace_back(canonical_form(r), canonical_form(dual(r)));
    return f;
  }();
  if (t.order() != 7) return std::nullopt;
  const CanonicalForm c = canonical_form(t);
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i].first == c || forms[i].second == c) return static_cast<int>(i);
  return std::nullopt;
}

VerificationReport verify_class(int n, const EmbeddingCatalogue& cat, const VerifyPolicy& policy) {
  if (n != 7 && n != 8) throw DomainError("verification runs on 7 or 8 vertices");
  if (cat.order() != n) throw DomainError("catalogue " + cat.name() + " does not embed K_" + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.n = n;
  report.catalogue = cat.name();
  const auto forms = enumerate_canonical_forms(n, policy.jobs);
  report.outcomes.resize(forms.size());

  parallel_for(forms.size(), policy.jobs, [&](std::size_t i) {
    ClassOutcome& o = report.outcomes[i];
    o.form = forms[i];
    const Tournament t = forms[i].tournament();
    for (Vertex v = 0; v < n; ++v) {
      o.max_in_degree = std::max(o.max_in_degree, t.in_degree(v));
      o.max_out_degree = std::max(o.max_out_degree, t.out_degree(v));
    }
    o.certificate = certify(t, cat, policy);
    if (o.leftover() && policy.audit_residual) {
      o.residual_index = match_residual(t);
      o.residual_match = o.residual_index.has_value();
    }
    if (policy.cg_two_step) {
      static const EmbeddingCatalogue cg("CGK7", 7, {}, {CyclePattern({0, 1, 2, 3, 4, 5, 6})});
      o.cg_two_step_ok = is_certified_labeling(t, cg_certificate(t).labeling, cg);
    }
  });

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::string> verify_targets() { return {"k7-linkless", "k7-knotless", "k8-knotless"}; }

VerificationReport verify_target(const std::string& target, int jobs) {
  VerifyPolicy policy;
  policy.jobs = jobs;
  VerificationReport r;
  if (target == "k7-linkless") {
    policy.audit_residual = true;
    r = verify_class(7, fmellor_k7(), policy);
  } else if (target == "k7-knotless") {
    policy.cg_two_step = true;
    r = verify_class(7, conway_gordon_k7(), policy);
  } else if (target == "k8-knotless") {
    policy.apex_catalogue = conway_gordon_k7();
    r = verify_class(8, amt_k8(), policy);
  } else {
    throw DomainError("unknown verification target '" + target + "'");
  }
  r.target = target;
  return r;
}

bool seven_vertex_linkless_witness(const Tournament& t) {
  if (t.order() != 7) throw DomainError("expected a 7-vertex tournament");
  static const EmbeddingCatalogue cat = fmellor_k7();
  VerifyPolicy policy;
  return certify(t, cat, policy).has_value() || match_residual(t).has_value();
}

}  // namespace tourlink
