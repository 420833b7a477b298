#include "tourlink/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "tourlink/errors.hpp"

namespace tourlink {

using ojson = nlohmann::ordered_json;

namespace {

ojson arcs_json(const Tournament& t) {
  ojson arcs = ojson::array();
  auto all = t.arcs();
  std::sort(all.begin(), all.end());
  for (const Arc& a : all) arcs.push_back({a.from + 1, a.to + 1});
  return arcs;
}

const char* kind_name(CertificateKind k) {
  return k == CertificateKind::apex_reduction ? "apex_reduction" : "embedding_labeling";
}

ojson outcome_json(std::size_t index, const ClassOutcome& o) {
  ojson j;
  j["index"] = index;
  j["canonical"] = o.form.to_string();
  j["max_in_degree"] = o.max_in_degree;
  j["max_out_degree"] = o.max_out_degree;
  if (o.certificate) {
    const Certificate& c = *o.certificate;
    ojson cj;
    cj["kind"] = kind_name(c.kind);
    cj["catalogue"] = c.catalogue;
    ojson lab = ojson::array();
    for (Vertex v : c.labeling) lab.push_back(v + 1);
    cj["labeling"] = lab;
    cj["apex"] = c.apex ? ojson(*c.apex + 1) : ojson(nullptr);
    cj["via_dual"] = c.via_dual;
    j["certificate"] = cj;
  } else {
    j["certificate"] = nullptr;
  }
  j["residual_match"] = o.residual_match;
  j["residual_index"] = o.residual_index ? ojson(*o.residual_index) : ojson(nullptr);
  j["cg_two_step_ok"] = o.cg_two_step_ok ? ojson(*o.cg_two_step_ok) : ojson(nullptr);
  return j;
}

std::size_t via_dual_count(const VerificationReport& r) {
  return static_cast<std::size_t>(std::count_if(r.outcomes.begin(), r.outcomes.end(),
                                                [](const auto& o) { return o.certificate && o.certificate->via_dual; }));
}

bool any_cg(const VerificationReport& r) {
  return std::any_of(r.outcomes.begin(), r.outcomes.end(), [](const auto& o) { return o.cg_two_step_ok.has_value(); });
}

}  // namespace

std::string tournament_json(const Tournament& t) {
  ojson j;
  j["n"] = t.order();
  j["arcs"] = arcs_json(t);
  return j.dump() + "\n";
}

std::string construction_json(const NamedConstruction& c) {
  ojson j;
  j["n"] = c.tournament.order();
  j["arcs"] = arcs_json(c.tournament);
  j["name"] = c.name;
  ojson roles = ojson::object();
  for (const auto& [name, v] : c.roles) roles[name] = v + 1;
  j["roles"] = roles;
  return j.dump() + "\n";
}

Tournament parse_tournament_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tournament JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("arcs") || !j["arcs"].is_array())
    throw ParseError("tournament JSON needs an integer \"n\" and an \"arcs\" array");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 4096) throw ParseError("tournament order out of range");
  const int order = static_cast<int>(n);
  OrientedGraph g(order);
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw ParseError("each arc must be a pair of integers");
    const auto u = a[0].get<long long>(), v = a[1].get<long long>();
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("arc endpoint out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    const Vertex x = static_cast<Vertex>(u - 1), y = static_cast<Vertex>(v - 1);
    if (g.adjacent(x, y)) throw ParseError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} listed twice");
    g.add_arc(x, y);
  }
  if (g.arc_count() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2 && order > 0)
    throw ParseError("not a tournament: " + std::to_string(g.arc_count()) + " arcs for " + std::to_string(order) + " vertices");
  return Tournament::from_graph(g);
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tournament load_tournament(const std::filesystem::path& file) { return parse_tournament_json(read_file(file)); }

std::string class_json_line(std::size_t index, const CanonicalForm& form) {
  ojson j;
  j["index"] = index;
  j["n"] = form.n;
  j["canonical"] = form.to_string();
  j["arcs"] = arcs_json(form.tournament());
  return j.dump();
}

std::string report_json(const VerificationReport& r, bool with_timing) {
  ojson j;
  j["target"] = r.target;
  j["catalogue"] = r.catalogue;
  j["n"] = r.n;
  j["classes"] = r.outcomes.size();
  j["certified"] = r.certified();
  j["apex_reductions"] = r.apex_reductions();
  j["via_dual"] = via_dual_count(r);
  j["leftovers"] = r.leftovers();
  j["unexplained_leftovers"] = r.unexplained_leftovers();
  j["cg_two_step_failures"] = any_cg(r) ? ojson(r.cg_two_step_failures()) : ojson(nullptr);
  j["success"] = r.success();
  ojson outcomes = ojson::array();
  for (std::size_t i = 0; i < r.outcomes.size(); ++i) outcomes.push_back(outcome_json(i, r.outcomes[i]));
  j["outcomes"] = outcomes;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(1) + "\n";
}

std::string report_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "# " << r.target << "\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| catalogue | " << r.catalogue << " |\n";
  out << "| n | " << r.n << " |\n";
  out << "| classes | " << r.outcomes.size() << " |\n";
  out << "| certified | " << r.certified() << " |\n";
  out << "| apex reductions | " << r.apex_reductions() << " |\n";
  out << "| found via dual | " << via_dual_count(r) << " |\n";
  out << "| leftovers | " << r.leftovers() << " |\n";
  out << "| unexplained leftovers | " << r.unexplained_leftovers() << " |\n";
  if (any_cg(r)) out << "| two-step failures | " << r.cg_two_step_failures() << " |\n";
  out << "| result | " << (r.success() ? "pass" : "FAIL") << " |\n";
  if (r.leftovers() > 0) {
    out << "\n## Leftovers\n\n";
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
      const auto& o = r.outcomes[i];
      if (!o.leftover()) continue;
      out << "- class " << i << " `" << o.form.to_string() << "`";
      if (o.residual_index) out << " residual member " << *o.residual_index;
      out << "\n";
    }
  }
  return out.str();
}

std::string validation_json(const Validation& v) {
  ojson j;
  j["construction"] = v.construction;
  j["ok"] = v.ok();
  ojson checks = ojson::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j.dump(1) + "\n";
}

std::string validation_text(const Validation& v) {
  std::ostringstream out;
  for (const auto& c : v.checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << v.construction << ": " << (v.ok() ? "valid" : "INVALID") << "\n";
  return out.str();
}

std::string gap_table_json(const std::vector<GapRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson j;
    j["n"] = r.n;
    j["complete_graph_order"] = r.m_lower;
    j["complete_graph_exact"] = r.m_exact;
    j["tournament_lower"] = r.tournament_lower;
    j["tournament_upper"] = r.tournament_upper;
    j["cg_lower"] = r.cg_lower;
    j["cg_upper"] = r.cg_upper;
    arr.push_back(j);
  }
  return arr.dump(1) + "\n";
}

std::string gap_table_markdown(const std::vector<GapRow>& rows) {
  std::ostringstream out;
  out << "| n | m (K_m) | m' (tournament) | cg(n) |\n|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.n << " | " << (r.m_exact ? "= " : ">= ") << r.m_lower << " | ";
    if (r.tournament_lower == r.tournament_upper)
      out << "= " << r.tournament_upper;
    else
      out << r.tournament_lower << " .. " << r.tournament_upper;
    out << " | ";
    if (r.exact())
      out << "= " << r.cg_upper;
    else
      out << r.cg_lower << " .. " << r.cg_upper;
    out << " |\n";
  }
  return out.str();
}

std::string to_dot(const Tournament& t, std::string_view name, const std::map<std::string, Vertex>& roles) {
  std::vector<std::string> label(static_cast<std::size_t>(t.order()));
  for (const auto& [r, v] : roles)
    if (v >= 0 && v < t.order()) label[static_cast<std::size_t>(v)] = r;
  std::ostringstream out;
  out << "digraph " << std::quoted(std::string(name)) << " {\n";
  for (Vertex v = 0; v < t.order(); ++v) {
    out << "  " << v + 1;
    if (!label[static_cast<std::size_t>(v)].empty()) out << " [label=" << std::quoted(label[static_cast<std::size_t>(v)]) << "]";
    out << ";\n";
  }
  auto arcs = t.arcs();
  std::sort(arcs.begin(), arcs.end());
  for (const Arc& a : arcs) out << "  " << a.from + 1 << " -> " << a.to + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tourlink
