#include "tourlink/linking.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "tourlink/errors.hpp"

namespace tourlink {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
  bits_.assign(static_cast<std::size_t>(rows) * words(), 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::ones(int rows, int cols) {
  Gf2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Gf2Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != cols) throw DomainError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const int x = row[static_cast<std::size_t>(c)];
      if (x != 0 && x != 1) throw DomainError("GF(2) entries must be 0 or 1");
      m.set(r, c, x == 1);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::random_unit_diagonal(int n, std::mt19937_64& rng) {
  Gf2Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.set(r, c, r == c || (rng() & 1U));
  return m;
}

bool Gf2Matrix::get(int r, int c) const {
  return (bits_[static_cast<std::size_t>(r) * words() + static_cast<std::size_t>(c / 64)] >> (c % 64)) & 1U;
}

void Gf2Matrix::set(int r, int c, bool value) {
  auto& w = bits_[static_cast<std::size_t>(r) * words() + static_cast<std::size_t>(c / 64)];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void Gf2Matrix::add_row(int dst, int src) {
  for (std::size_t k = 0; k < words(); ++k)
    bits_[static_cast<std::size_t>(dst) * words() + k] ^= bits_[static_cast<std::size_t>(src) * words() + k];
}

void Gf2Matrix::swap_rows(int a, int b) {
  for (std::size_t k = 0; k < words(); ++k)
    std::swap(bits_[static_cast<std::size_t>(a) * words() + k], bits_[static_cast<std::size_t>(b) * words() + k]);
}

Gf2Vector Gf2Matrix::row(int r) const {
  Gf2Vector v(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v[static_cast<std::size_t>(c)] = get(r, c);
  return v;
}

int Gf2Matrix::row_weight(int r) const {
  int w = 0;
  for (std::size_t k = 0; k < words(); ++k) w += std::popcount(bits_[static_cast<std::size_t>(r) * words() + k]);
  return w;
}

bool Gf2Matrix::row_is_zero(int r) const { return row_weight(r) == 0; }

bool Gf2Matrix::unit_diagonal() const {
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    if (!get(i, i)) return false;
  return true;
}

bool Gf2Matrix::columns_covered() const {
  for (int c = 0; c < cols_; ++c) {
    bool any = false;
    for (int r = 0; r < rows_ && !any; ++r) any = get(r, c);
    if (!any) return false;
  }
  return true;
}

Gf2Matrix Rref::combination() const {
  Gf2Matrix c = Gf2Matrix::identity(reduced.rows());
  for (const RowOp& op : oplog) {
    if (op.kind == RowOp::Kind::swap)
      c.swap_rows(op.target, op.source);
    else
      c.add_row(op.target, op.source);
  }
  return c;
}

Rref rref(const Gf2Matrix& m) {
  Rref out;
  out.reduced = m;
  Gf2Matrix& a = out.reduced;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = row;
    while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      a.swap_rows(pivot, row);
      out.oplog.push_back({RowOp::Kind::swap, row, pivot});
    }
    for (int r = 0; r < a.rows(); ++r) {
      if (r != row && a.get(r, col)) {
        a.add_row(r, row);
        out.oplog.push_back({RowOp::Kind::add, r, row});
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int column_rank(const Gf2Matrix& m) {
  Gf2Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.get(r, c));
  int rank = 0;
  for (int col = 0; col < t.cols() && rank < t.rows(); ++col) {
    int pivot = rank;
    while (pivot < t.rows() && !t.get(pivot, col)) ++pivot;
    if (pivot == t.rows()) continue;
    t.swap_rows(pivot, rank);
    for (int r = rank + 1; r < t.rows(); ++r)
      if (t.get(r, col)) t.add_row(r, rank);
    ++rank;
  }
  return rank;
}

int weight(const Gf2Vector& v) { return static_cast<int>(std::count(v.begin(), v.end(), true)); }

Gf2Vector row_sum(const Gf2Matrix& m, const std::vector<int>& indices) {
  Gf2Vector v(static_cast<std::size_t>(m.cols()), false);
  for (int i : indices) {
    if (i < 0 || i >= m.rows()) throw DomainError("row index out of range");
    for (int c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] != m.get(i, c);
  }
  return v;
}

std::optional<IndexSelection> select_weighted_rows(const Gf2Matrix& m, int threshold) {
  const Rref r = rref(m);
  const Gf2Matrix comb = r.combination();
  IndexSelection sel;
  sel.rank = r.rank;
  Gf2Vector used(static_cast<std::size_t>(m.rows()), false);
  auto take = [&](int reduced_row) {
    for (int j = 0; j < m.rows(); ++j)
      if (comb.get(reduced_row, j)) used[static_cast<std::size_t>(j)] = !used[static_cast<std::size_t>(j)];
  };
  if (r.rank >= threshold) {
    sel.full_rank_branch = true;
    for (int i = 0; i < r.rank; ++i) take(i);
  } else {
    int chosen = -1;
    for (int i = 0; i < r.rank && chosen < 0; ++i)
      if (r.reduced.row_weight(i) >= threshold) chosen = i;
    if (chosen < 0) return std::nullopt;
    take(chosen);
  }
  for (int j = 0; j < m.rows(); ++j)
    if (used[static_cast<std::size_t>(j)]) sel.indices.push_back(j);
  sel.v = row_sum(m, sel.indices);
  return sel;
}

IndexSelection select_index_set(const Gf2Matrix& m, int n) {
  if (n < 2) throw DomainError("select_index_set needs n >= 2");
  const int size = (2 * n - 3) * (2 * n - 3);
  if (m.rows() != size || m.cols() != size)
    throw DomainError("expected a " + std::to_string(size) + "x" + std::to_string(size) + " matrix for n = " + std::to_string(n));
  if (!m.unit_diagonal()) throw DomainError("matrix diagonal must be all ones");
  auto sel = select_weighted_rows(m, 2 * n - 3);
  if (!sel) throw WitnessFailure("no reduced row reaches weight " + std::to_string(2 * n - 3));
  return *sel;
}

std::vector<int> simulate_zcycle_linking(const Gf2Matrix& m, const Gf2Vector& c, int n) {
  if (static_cast<int>(c.size()) != m.cols()) throw DomainError("linking vector length does not match the matrix");
  if (weight(c) > n - 2) throw DomainError("more than n-2 targets already link C");
  const IndexSelection sel = select_index_set(m, n);
  std::vector<int> linked;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != sel.v[j]) linked.push_back(static_cast<int>(j));
  return linked;
}

int PigeonholeInstance::bins_of(int target) const {
  const auto& row = incidence.at(static_cast<std::size_t>(target));
  return static_cast<int>(std::count(row.begin(), row.end(), true));
}

int PigeonholeInstance::targets_of(int bin) const {
  int k = 0;
  for (const auto& row : incidence) k += row.at(static_cast<std::size_t>(bin));
  return k;
}

PigeonholeChoice pigeonhole_select(const PigeonholeInstance& inst, int need) {
  if (static_cast<int>(inst.incidence.size()) != inst.targets) throw DomainError("incidence has the wrong number of targets");
  for (const auto& row : inst.incidence)
    if (static_cast<int>(row.size()) != inst.bins) throw DomainError("incidence has the wrong number of bins");
  for (int t = 0; t < inst.targets; ++t)
    if (inst.bins_of(t) < 2) throw DomainError("target " + std::to_string(t) + " links fewer than two bins");
  if (!(2 * inst.targets > (need - 2) * inst.bins)) throw DomainError("too few targets for the pigeonhole count");

  for (int b = 0; b < inst.bins; ++b) {
    if (inst.targets_of(b) < need - 1) continue;
    PigeonholeChoice out;
    out.bin = b;
    for (int t = 0; t < inst.targets && static_cast<int>(out.targets.size()) < need - 1; ++t)
      if (inst.incidence[static_cast<std::size_t>(t)][static_cast<std::size_t>(b)]) out.targets.push_back(t);
    return out;
  }
  throw WitnessFailure("no bin reaches " + std::to_string(need - 1) + " targets");
}

PigeonholeInstance homology_incidence(const std::vector<std::vector<int>>& values, const std::vector<int>& signs,
                                      const std::vector<int>& partners) {
  if (partners.size() != values.size()) throw DomainError("one partner bin per target");
  for (int s : signs)
    if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
  PigeonholeInstance inst;
  inst.bins = static_cast<int>(signs.size());
  inst.targets = static_cast<int>(values.size());
  for (std::size_t t = 0; t < values.size(); ++t) {
    const auto& row = values[t];
    if (row.size() != signs.size()) throw DomainError("value row length does not match the bins");
    long sum = 0;
    for (std::size_t b = 0; b < row.size(); ++b) sum += static_cast<long>(signs[b]) * row[b];
    if (sum != 0) throw DomainError("target " + std::to_string(t) + ": signed sum is " + std::to_string(sum) + ", not 0");
    const int p = partners[t];
    if (p < 0 || p >= inst.bins) throw DomainError("partner bin out of range");
    if (row[static_cast<std::size_t>(p)] == 0) throw DomainError("target " + std::to_string(t) + " does not link its partner bin");
    std::vector<bool> inc(row.size());
    for (std::size_t b = 0; b < row.size(); ++b) inc[b] = row[b] != 0;
    inst.incidence.push_back(std::move(inc));
  }
  return inst;
}

std::vector<GapRow> gap_table(int max_n) {
  if (max_n < 2) throw DomainError("gap table starts at n = 2");
  std::vector<GapRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    GapRow r;
    r.n = n;
    r.m_lower = 3 * n;
    r.tournament_upper = 8 * (2 * n - 3) * (2 * n - 3);
    switch (n) {
      case 2:
        r.m_lower = 6;
        r.m_exact = true;
        r.tournament_upper = 8;
        break;
      case 3:
        r.m_lower = 10;
        r.m_exact = true;
        r.tournament_upper = 23;
        break;
      case 4:
        r.tournament_upper = 66;
        break;
      case 5:
        r.tournament_upper = 154;
        break;
      default:
        break;
    }
    // An intrinsically n-linked tournament makes its underlying K_m' intrinsically n-linked.
    r.tournament_lower = n == 2 ? 8 : r.m_lower;
    r.cg_lower = n == 2 ? 2 : 0;
    r.cg_upper = r.tournament_upper - r.m_lower;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace tourlink
