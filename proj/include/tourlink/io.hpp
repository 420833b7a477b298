#pragma once

// Serialisation: tournaments as JSON with 1-based vertices, enumeration as
// JSON lines, verification reports, validations, the gap table and DOT.
// Every writer is deterministic: same input, same bytes.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tourlink/constructions.hpp"
#include "tourlink/digraph.hpp"
#include "tourlink/iso.hpp"
#include "tourlink/linking.hpp"
#include "tourlink/verify.hpp"

namespace tourlink {

/// {"n":N,"arcs":[[u,v],...]} with arcs sorted; a construction adds "name" and "roles".
[[nodiscard]] std::string tournament_json(const Tournament& t);
[[nodiscard]] std::string construction_json(const NamedConstruction& c);

/// Reads the format above; extra keys are ignored. ParseError for malformed
/// JSON, out-of-range or repeated pairs, or a pair left unoriented.
[[nodiscard]] Tournament parse_tournament_json(std::string_view text);
[[nodiscard]] Tournament load_tournament(const std::filesystem::path& file);

/// One line of `enumerate` output, without the newline.
[[nodiscard]] std::string class_json_line(std::size_t index, const CanonicalForm& form);

[[nodiscard]] std::string report_json(const VerificationReport& r, bool with_timing = false);
[[nodiscard]] std::string report_markdown(const VerificationReport& r);

[[nodiscard]] std::string validation_json(const Validation& v);
[[nodiscard]] std::string validation_text(const Validation& v);

[[nodiscard]] std::string gap_table_json(const std::vector<GapRow>& rows);
[[nodiscard]] std::string gap_table_markdown(const std::vector<GapRow>& rows);

/// Vertices are numbered from 1; role names become labels when given.
[[nodiscard]] std::string to_dot(const Tournament& t, std::string_view name,
                                 const std::map<std::string, Vertex>& roles = {});

/// Reads a whole file; ParseError when it cannot be opened.
[[nodiscard]] std::string read_file(const std::filesystem::path& file);

}  // namespace tourlink
