#pragma once

// GF(2) row reduction and the abstract counting arguments behind the
// multi-component linking constructions: choosing a row combination of a
// mod-2 linking matrix, pigeonholing targets into candidate cycles, and the
// table of known bounds on the consistency gap.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tourlink {

using Gf2Vector = std::vector<bool>;

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  static Gf2Matrix identity(int n);
  static Gf2Matrix ones(int rows, int cols);
  /// Throws DomainError on ragged input or entries other than 0 and 1.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Uniform random entries with the diagonal forced to 1.
  static Gf2Matrix random_unit_diagonal(int n, std::mt19937_64& rng);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] bool get(int r, int c) const;
  void set(int r, int c, bool value);
  /// row dst ^= row src
  void add_row(int dst, int src);
  void swap_rows(int a, int b);
  [[nodiscard]] Gf2Vector row(int r) const;
  [[nodiscard]] int row_weight(int r) const;
  [[nodiscard]] bool row_is_zero(int r) const;
  [[nodiscard]] bool unit_diagonal() const;
  /// Every column holds at least one 1.
  [[nodiscard]] bool columns_covered() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  [[nodiscard]] std::size_t words() const { return static_cast<std::size_t>((cols_ + 63) / 64); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// One elementary row operation, in the order applied.
struct RowOp {
  enum class Kind { swap, add } kind;
  int target;
  int source;
  friend bool operator==(const RowOp&, const RowOp&) = default;
};

struct Rref {
  Gf2Matrix reduced;
  int rank = 0;
  std::vector<int> pivot_columns;
  std::vector<RowOp> oplog;

  /// Replays the oplog on an identity: row i lists the input rows summing to reduced row i.
  [[nodiscard]] Gf2Matrix combination() const;
};

[[nodiscard]] Rref rref(const Gf2Matrix& m);

/// Rank by eliminating columns instead of rows, for cross-checks.
[[nodiscard]] int column_rank(const Gf2Matrix& m);

struct IndexSelection {
  std::vector<int> indices;  ///< rows of M, ascending, 0-based
  Gf2Vector v;
  int rank = 0;
  bool full_rank_branch = false;
};

[[nodiscard]] int weight(const Gf2Vector& v);
/// XOR of the listed rows.
[[nodiscard]] Gf2Vector row_sum(const Gf2Matrix& m, const std::vector<int>& indices);

/// rank >= threshold: V is the sum of the non-zero rows of the RREF. Otherwise
/// V is the lowest RREF row of weight >= threshold, if there is one.
[[nodiscard]] std::optional<IndexSelection> select_weighted_rows(const Gf2Matrix& m, int threshold);

/// Square (2n-3)^2 matrix with unit diagonal (DomainError otherwise);
/// threshold 2n-3. Throws WitnessFailure if no row reaches the threshold.
[[nodiscard]] IndexSelection select_index_set(const Gf2Matrix& m, int n);

/// Targets j with c_j + V_j = 1 for the selection of select_index_set.
/// Requires weight(c) <= n-2 and c of matching length (DomainError).
[[nodiscard]] std::vector<int> simulate_zcycle_linking(const Gf2Matrix& m, const Gf2Vector& c, int n);

struct PigeonholeInstance {
  int bins = 0;
  int targets = 0;
  /// incidence[target][bin]
  std::vector<std::vector<bool>> incidence;

  [[nodiscard]] int bins_of(int target) const;
  [[nodiscard]] int targets_of(int bin) const;
};

struct PigeonholeChoice {
  int bin = 0;
  std::vector<int> targets;
};

/// Lowest bin linked to at least need-1 targets, with the lowest need-1 of
/// them. DomainError unless every target has two bins and
/// 2 * targets > (need - 2) * bins.
[[nodiscard]] PigeonholeChoice pigeonhole_select(const PigeonholeInstance& inst, int need);

/// values[target][bin] are integer linking numbers, signs[bin] = +1 or -1.
/// Each target's signed sum must vanish and its partner bin must be non-zero
/// (DomainError otherwise); incidence is value != 0.
[[nodiscard]] PigeonholeInstance homology_incidence(const std::vector<std::vector<int>>& values,
                                                    const std::vector<int>& signs, const std::vector<int>& partners);

struct GapRow {
  int n = 0;
  int m_lower = 0;        ///< smallest intrinsically n-linked complete graph K_m
  bool m_exact = false;
  int tournament_lower = 0;  ///< m'
  int tournament_upper = 0;
  int cg_lower = 0;
  int cg_upper = 0;

  [[nodiscard]] bool exact() const { return cg_lower == cg_upper; }
};

/// Rows n = 2..max_n. DomainError when max_n < 2.
[[nodiscard]] std::vector<GapRow> gap_table(int max_n);

}  // namespace tourlink
