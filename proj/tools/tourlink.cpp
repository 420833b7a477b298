// tourlink: enumerate tournaments, run the embedding verifications, build and
// validate the explicit constructions, and print the linking tables.
//
// Exit status: 0 success, 1 a verification or validation failed, 2 usage or input error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourlink/constructions.hpp"
#include "tourlink/errors.hpp"
#include "tourlink/io.hpp"
#include "tourlink/iso.hpp"
#include "tourlink/linking.hpp"
#include "tourlink/verify.hpp"

namespace {

using namespace tourlink;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

bool is_construction(const std::string& s) {
  const auto names = construction_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

struct Loaded {
  std::string name;
  Tournament tournament;
  std::map<std::string, Vertex> roles;
};

// A construction name builds it; anything else is read as a tournament file.
Loaded load_subject(const std::string& subject, int n, const std::string& as) {
  if (is_construction(subject)) {
    NamedConstruction c = build_construction(subject, n);
    return {c.name, c.tournament, c.roles};
  }
  if (!std::filesystem::exists(subject))
    throw UsageError("'" + subject + "' is neither a construction name nor a file");
  const std::string text = read_file(subject);
  Loaded l{as, parse_tournament_json(text), {}};
  if (l.name.empty()) {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("name") && j["name"].is_string()) l.name = j["name"].get<std::string>();
  }
  if (!l.name.empty()) {
    if (!is_construction(l.name)) throw UsageError("unknown construction '" + l.name + "'");
    l.roles = build_construction(l.name, n).roles;
  }
  return l;
}

std::string gf2_demo(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int k = (2 * n - 3) * (2 * n - 3);
  const Gf2Matrix m = Gf2Matrix::random_unit_diagonal(k, rng);
  Gf2Vector c(static_cast<std::size_t>(k), false);
  const int ones = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
  std::vector<int> slots(static_cast<std::size_t>(k));
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  for (int i = 0; i < ones; ++i) c[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = true;

  const IndexSelection sel = select_index_set(m, n);
  const auto linked = simulate_zcycle_linking(m, c, n);

  std::ostringstream out;
  auto bits = [](const Gf2Vector& v) {
    std::string s;
    for (bool b : v) s += b ? '1' : '0';
    return s;
  };
  out << "n = " << n << ", M is " << k << "x" << k << ", seed " << seed << "\n";
  out << "M =\n";
  for (int r = 0; r < k; ++r) out << "  " << bits(m.row(r)) << "\n";
  out << "rank = " << sel.rank << " (" << (sel.full_rank_branch ? "sum of all reduced rows" : "single heavy reduced row") << ")\n";
  out << "I = {";
  for (std::size_t i = 0; i < sel.indices.size(); ++i) out << (i ? ", " : "") << sel.indices[i] + 1;
  out << "}\n";
  out << "V = " << bits(sel.v) << "  weight " << weight(sel.v) << " (need >= " << 2 * n - 3 << ")\n";
  out << "C = " << bits(c) << "  weight " << weight(c) << "\n";
  out << "linked targets = " << linked.size() << " (need >= " << n - 1 << ")\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament linking and knotting toolkit"};
  app.require_subcommand(1);

  int jobs = 1;
  int n = 3;
  std::string out_path;
  std::string format;
  std::string target, subject, as;
  bool timing = false;
  bool json_out = false;
  std::uint64_t seed = 1;
  int max_n = 10;

  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes as JSON lines");
  enumerate->add_option("--n", n, "Order, 3..8")->required()->check(CLI::Range(kMinEnumerationOrder, kMaxEnumerationOrder));
  enumerate->add_option("--out", out_path, "Output file (default stdout)");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Certify every class against an embedding catalogue");
  verify->add_option("target", target, "k7-linkless | k7-knotless | k8-knotless")
      ->required()
      ->check(CLI::IsMember(verify_targets()));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", out_path, "Report file (default stdout)");
  verify->add_option("--format", format, "json | md")->check(CLI::IsMember({"json", "md"}));
  verify->add_flag("--timing", timing, "Include elapsed time in the JSON report");

  auto* build = app.add_subcommand("build", "Write a construction as tournament JSON");
  build->add_option("name", subject, "Construction name")->required()->check(CLI::IsMember(construction_names()));
  build->add_option("--n", n, "Parameter for nlinked")->check(CLI::Range(2, 64));
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Run a construction's structural validator");
  validate_cmd->add_option("subject", subject, "Construction name or tournament file")->required();
  validate_cmd->add_option("--as", as, "Construction layout to validate a file against");
  validate_cmd->add_option("--n", n, "Parameter for nlinked")->check(CLI::Range(2, 64));
  validate_cmd->add_flag("--json", json_out, "Print the checks as JSON");

  auto* gf2 = app.add_subcommand("gf2-demo", "Index-set selection on a random unit-diagonal matrix");
  gf2->add_option("--n", n, "Number of link components")->check(CLI::Range(2, 12));
  gf2->add_option("--seed", seed, "Random seed");

  auto* gap = app.add_subcommand("gap-table", "Bounds on the consistency gap");
  gap->add_option("--max-n", max_n, "Last row")->check(CLI::Range(2, 1000));
  gap->add_option("--format", format, "md | json")->check(CLI::IsMember({"md", "json"}));

  auto* exporter = app.add_subcommand("export", "Render a construction or tournament file");
  exporter->add_option("subject", subject, "Construction name or tournament file")->required();
  exporter->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));
  exporter->add_option("--n", n, "Parameter for nlinked")->check(CLI::Range(2, 64));
  exporter->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*enumerate) {
      const auto forms = enumerate_canonical_forms(n, jobs);
      std::string text;
      for (std::size_t i = 0; i < forms.size(); ++i) text += class_json_line(i, forms[i]) + "\n";
      emit(text, out_path);
      std::cerr << forms.size() << " classes on " << n << " vertices\n";
      return kOk;
    }
    if (*verify) {
      const VerificationReport r = verify_target(target, jobs);
      emit(format == "md" ? report_markdown(r) : report_json(r, timing), out_path);
      std::cerr << r.target << ": " << r.certified() << "/" << r.outcomes.size() << " certified, " << r.apex_reductions()
                << " by apex reduction, " << r.unexplained_leftovers() << " unexplained leftovers, " << r.elapsed_ms
                << " ms\n";
      return r.success() ? kOk : kFailed;
    }
    if (*build) {
      const NamedConstruction c = build_construction(subject, n);
      emit(construction_json(c), out_path);
      std::cerr << c.name << ": " << c.tournament.order() << " vertices\n";
      return kOk;
    }
    if (*validate_cmd) {
      const Loaded l = load_subject(subject, n, as);
      if (l.name.empty()) throw UsageError("give --as <name> to validate a file without a \"name\" field");
      const Validation v = validate_as(l.name, l.tournament, n);
      std::cout << (json_out ? validation_json(v) : validation_text(v));
      return v.ok() ? kOk : kFailed;
    }
    if (*gf2) {
      std::cout << gf2_demo(n, seed);
      return kOk;
    }
    if (*gap) {
      const auto rows = gap_table(max_n);
      std::cout << (format == "json" ? gap_table_json(rows) : gap_table_markdown(rows));
      return kOk;
    }
    if (*exporter) {
      const Loaded l = load_subject(subject, n, as);
      emit(to_dot(l.tournament, l.name.empty() ? "T" : l.name, l.roles), out_path);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const WitnessFailure& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
