#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qschur/fp.hpp"

namespace qschur {

/* Incremental Gaussian elimination over F_ell for sparse vectors indexed by
 * integer tuples.  Rows are kept reduced with pivot coefficient 1; insert()
 * reports whether the new vector enlarged the span. */
struct SparseRank {
  using Key = std::vector<int>;
  using Row = std::map<Key, Fp>;
  std::map<Key, Row> rows;

  bool insert(Row r) {
    while (!r.empty()) {
      Key piv = r.begin()->first;
      Fp c = r.begin()->second;
      auto it = rows.find(piv);
      if (it == rows.end()) {
        Fp ci = c.inv();
        for (auto& [k, v] : r) v = v * ci;
        rows.emplace(std::move(piv), std::move(r));
        return true;
      }
      for (auto& [k, v] : it->second) {
        auto jt = r.find(k);
        Fp nv = (jt == r.end() ? c.of(0) : jt->second) - c * v;
        if (nv.is_zero()) {
          if (jt != r.end()) r.erase(jt);
        } else if (jt == r.end()) {
          r.emplace(k, nv);
        } else {
          jt->second = nv;
        }
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

/* Exact solution of sum_j x_j col_j = rhs over F_ell with sparse columns.
 * Returns a particular solution (free coordinates zero), or nothing when the
 * system is inconsistent; zero supplies the field context. */
inline std::optional<std::vector<Fp>> solve_columns(
    const std::vector<SparseRank::Row>& cols, const SparseRank::Row& rhs,
    Fp zero) {
  std::map<SparseRank::Key, int> index;
  for (const auto& col : cols)
    for (const auto& [k, v] : col) index.emplace(k, 0);
  for (const auto& [k, v] : rhs) index.emplace(k, 0);
  int rows = 0;
  for (auto& [k, i] : index) i = rows++;
  int ncol = static_cast<int>(cols.size());
  std::vector<std::vector<Fp>> m(rows, std::vector<Fp>(ncol + 1, zero));
  for (int j = 0; j < ncol; ++j)
    for (const auto& [k, v] : cols[j]) m[index[k]][j] = v;
  for (const auto& [k, v] : rhs) m[index[k]][ncol] = v;

  std::vector<int> pivots;
  int r = 0;
  for (int j = 0; j < ncol && r < rows; ++j) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][j].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Fp ci = m[r][j].inv();
    for (int k = j; k <= ncol; ++k) m[r][k] *= ci;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][j].is_zero()) continue;
      Fp c = m[i][j];
      for (int k = j; k <= ncol; ++k) m[i][k] -= c * m[r][k];
    }
    pivots.push_back(j);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!m[i][ncol].is_zero()) return std::nullopt;
  std::vector<Fp> x(ncol, zero);
  for (int i = 0; i < r; ++i) x[pivots[i]] = m[i][ncol];
  return x;
}

}  // namespace qschur
