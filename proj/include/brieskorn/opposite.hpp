#pragma once

// Opposite filtrations U coming from unit lower-triangular frames
// e_i = sum_{j<=i} A_{i,j} e~_j, and the F_0 (+) U^1 splitting.

#include <optional>
#include <span>
#include <vector>

#include "brieskorn/lattice.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/unit_pivot.hpp"

namespace brieskorn {

class Frame {
 public:
  /// DomainError unless `a` is square and unit lower-triangular.
  static Frame from_matrix(RationalMatrix a);
  static Frame identity(int r);
  /// Identity except A_{1,0} = alpha, A_{2,0} = beta, A_{2,1} = gamma (r >= 2).
  static Frame from_triple(int r, const Rational& alpha, const Rational& beta, const Rational& gamma);

  int r() const { return static_cast<int>(a_.rows()) - 1; }
  int dim() const { return static_cast<int>(a_.rows()); }
  const RationalMatrix& matrix() const { return a_; }
  const RationalMatrix& inverse() const { return a_inv_; }

  /// e~_j in e-coordinates: row j of A^-1.
  std::vector<Rational> tilde_basis(int j) const;
  /// e~-coordinates of a vector given in e-coordinates: A^T x.
  std::vector<Rational> to_tilde(std::span<const Rational> x) const;
  HVector to_tilde(const HVector& x) const;

  const Rational& alpha() const;
  const Rational& beta() const;
  const Rational& gamma() const;

  /// Frame of the product matrix (a * b).
  friend Frame operator*(const Frame& a, const Frame& b);
  friend bool operator==(const Frame& a, const Frame& b) { return a.a_ == b.a_; }

 private:
  explicit Frame(RationalMatrix a);
  RationalMatrix a_;
  RationalMatrix a_inv_;
};

/// U^p at weight w: span{e~_j : j >= p + w}, as e-coordinate HVectors.
std::vector<HVector> u_subspace(const Frame& frame, int w, int p, int nvars, int degree_bound);

struct OppositeCheck {
  bool opposite = true;
  std::optional<int> failing_p;
};

/// F_{0,p} (+) U^{p+1} = H for p = -1..r, where F_{0,p} is spanned by the
/// given leads with lead weight <= p (vectors at s = 0).
OppositeCheck is_opposite(const Frame& frame, const std::vector<std::vector<Rational>>& leads,
                          const std::vector<int>& lead_weights);
OppositeCheck is_opposite(const Frame& frame, const Lattice& lat);

struct SplitResult {
  HVector f_part;
  HVector u_part;
  std::vector<Series> f_coefficients;
  std::vector<Series> u_coefficients;
};

/// x = f + u with f in the span of f_basis and u in the span of u_basis.
/// DomainError when the combined basis is degenerate or does not reach x.
SplitResult split(const HVector& x, const std::vector<HVector>& f_basis, const std::vector<HVector>& u_basis,
                  PivotOrder order = PivotOrder::Forward);

}  // namespace brieskorn
