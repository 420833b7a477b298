#pragma once

// Link and knot catalogues of fixed spatial embeddings of K_n.
//
// Entries are written in compact digit notation: "457-236" is the link whose
// components are the cycles 4-5-7 and 2-3-6, "15862347" is a knotted cycle.
// Digits are 1-based embedding labels; in memory they become 0-based vertices.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tourlink/cycle.hpp"

namespace tourlink {

struct LinkEntry {
  CyclePattern first;
  CyclePattern second;
};

/// A knot is one component, a link two.
struct CompactEntry {
  std::vector<CyclePattern> components;

  [[nodiscard]] bool is_link() const { return components.size() == 2; }
};

/// Throws ParseError on anything other than digits 1-9 with at most one
/// hyphen, on a repeated digit inside a component, or a component shorter than 3.
[[nodiscard]] CompactEntry parse_compact(std::string_view s);
[[nodiscard]] std::string to_compact(const CyclePattern& p);
[[nodiscard]] std::string to_compact(const LinkEntry& link);

class EmbeddingCatalogue {
 public:
  EmbeddingCatalogue() = default;
  /// Validates labels and link disjointness (DomainError); drops entries that
  /// repeat an earlier one up to rotation, reflection and component order.
  EmbeddingCatalogue(std::string name, int n, std::vector<LinkEntry> links, std::vector<CyclePattern> knots);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] const std::vector<LinkEntry>& links() const { return links_; }
  [[nodiscard]] const std::vector<CyclePattern>& knots() const { return knots_; }

  /// {"name":..., "n":..., "links":["457-236",...], "knots":["1462375",...]}
  [[nodiscard]] static EmbeddingCatalogue from_json_text(const std::string& text);
  [[nodiscard]] static EmbeddingCatalogue load(const std::filesystem::path& file);
  [[nodiscard]] std::string to_json_text() const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<LinkEntry> links_;
  std::vector<CyclePattern> knots_;
};

/// TOURLINK_DATA_DIR when set, otherwise the data directory of the source tree.
[[nodiscard]] std::filesystem::path data_dir();

/// Shipped catalogues, read from <data_dir>/catalogues/<file>.
[[nodiscard]] EmbeddingCatalogue fmellor_k7();
[[nodiscard]] EmbeddingCatalogue amt_k8();
[[nodiscard]] EmbeddingCatalogue conway_gordon_k7();

}  // namespace tourlink
