#pragma once

#include <span>
#include <vector>

#include "brieskorn/gmsystem.hpp"

namespace brieskorn {

/// Order in which columns are eliminated and candidate pivot rows scanned.
/// Both orders give the same solution whenever one exists; tests rely on
/// this to check uniqueness of decompositions.
enum class PivotOrder { Forward, Reverse };

struct UnitPivotSolution {
  std::vector<Series> coefficients;  // one per column
  HVector residual;                  // rhs - sum coefficients[c] * columns[c]
  std::vector<int> pivot_rows;       // pivot row used for each column
  bool exact() const { return residual.is_zero(); }
};

/// Solves sum_c x_c * columns[c] = rhs over the truncated series ring by
/// Gauss-Jordan elimination with unit pivots (constant term nonzero). The
/// columns must be linearly independent at s = 0; otherwise DomainError.
/// When rhs is outside the span the residual is nonzero.
UnitPivotSolution solve_unit_pivot(std::span<const HVector> columns, const HVector& rhs,
                                   PivotOrder order = PivotOrder::Forward);

}  // namespace brieskorn
