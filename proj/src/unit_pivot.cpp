#include "brieskorn/unit_pivot.hpp"

namespace brieskorn {

UnitPivotSolution solve_unit_pivot(std::span<const HVector> columns, const HVector& rhs, PivotOrder order) {
  const int rows = rhs.dim();
  const int cols = static_cast<int>(columns.size());
  if (cols > rows) throw DomainError("more columns than coordinates: columns cannot be independent");

  // m[i][c], b[i]
  std::vector<std::vector<Series>> m(static_cast<std::size_t>(rows));
  std::vector<Series> b = rhs.coords();
  for (int c = 0; c < cols; ++c) {
    if (columns[c].dim() != rows) throw StructuralError("column dimension mismatch");
    for (int i = 0; i < rows; ++i) m[i].push_back(columns[c][i]);
  }

  std::vector<int> pivot_of(static_cast<std::size_t>(cols), -1);
  std::vector<bool> used(static_cast<std::size_t>(rows), false);
  for (int step = 0; step < cols; ++step) {
    const int c = order == PivotOrder::Forward ? step : cols - 1 - step;
    int p = -1;
    for (int k = 0; k < rows && p < 0; ++k) {
      const int i = order == PivotOrder::Forward ? k : rows - 1 - k;
      if (!used[i] && sgn(m[i][c].constant_term()) != 0) p = i;
    }
    if (p < 0) throw DomainError("columns are dependent at s = 0 (no unit pivot for column " + std::to_string(c) + ")");
    used[p] = true;
    pivot_of[c] = p;

    Series inv = unit_inverse(m[p][c]);
    for (int j = 0; j < cols; ++j)
      if (!m[p][j].is_zero()) m[p][j] = m[p][j] * inv;
    b[p] = b[p] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == p || m[i][c].is_zero()) continue;
      Series factor = m[i][c];
      for (int j = 0; j < cols; ++j)
        if (!m[p][j].is_zero()) m[i][j] -= factor * m[p][j];
      if (!b[p].is_zero()) b[i] -= factor * b[p];
    }
  }

  UnitPivotSolution out;
  out.pivot_rows = pivot_of;
  HVector combination(rows, rhs.nvars(), rhs.degree_bound());
  for (int c = 0; c < cols; ++c) {
    out.coefficients.push_back(b[pivot_of[c]]);
    combination += columns[c].scaled(b[pivot_of[c]]);
  }
  out.residual = rhs - combination;
  return out;
}

}  // namespace brieskorn
