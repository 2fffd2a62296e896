#include "brieskorn/opposite.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

Frame::Frame(RationalMatrix a) : a_(std::move(a)), a_inv_(a_.unitriangular_inverse()) {}

Frame Frame::from_matrix(RationalMatrix a) {
  if (!a.square() || a.rows() < 2) throw DomainError("frame matrix must be square of size >= 2");
  if (!a.is_lower_unitriangular()) throw DomainError("frame matrix must be unit lower-triangular:\n" + a.to_string());
  return Frame(std::move(a));
}

Frame Frame::identity(int r) {
  if (r < 1) throw StructuralError("frame needs r >= 1");
  return Frame(RationalMatrix::identity(static_cast<std::size_t>(r + 1)));
}

Frame Frame::from_triple(int r, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (r < 2) throw StructuralError("(alpha, beta, gamma) frame needs r >= 2");
  RationalMatrix a = RationalMatrix::identity(static_cast<std::size_t>(r + 1));
  a(1, 0) = alpha;
  a(2, 0) = beta;
  a(2, 1) = gamma;
  return Frame(std::move(a));
}

std::vector<Rational> Frame::tilde_basis(int j) const {
  if (j < 0 || j > r()) throw StructuralError("tilde_basis index outside 0..r");
  std::vector<Rational> out(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out[static_cast<std::size_t>(i)] = a_inv_(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
  return out;
}

std::vector<Rational> Frame::to_tilde(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim()) throw StructuralError("to_tilde: vector length does not match the frame");
  std::vector<Rational> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = j; i < x.size(); ++i) out[j] += a_(i, j) * x[i];
  return out;
}

HVector Frame::to_tilde(const HVector& x) const {
  if (x.dim() != dim()) throw StructuralError("to_tilde: vector length does not match the frame");
  HVector out(x.dim(), x.nvars(), x.degree_bound());
  for (int j = 0; j < dim(); ++j)
    for (int i = j; i < dim(); ++i) {
      const Rational& a = a_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (a != 0) out[j] += x[i].scaled(a);
    }
  return out;
}

const Rational& Frame::alpha() const { return a_(1, 0); }
const Rational& Frame::beta() const {
  if (r() < 2) throw StructuralError("beta needs r >= 2");
  return a_(2, 0);
}
const Rational& Frame::gamma() const {
  if (r() < 2) throw StructuralError("gamma needs r >= 2");
  return a_(2, 1);
}

Frame operator*(const Frame& a, const Frame& b) { return Frame::from_matrix(a.a_ * b.a_); }

std::vector<HVector> u_subspace(const Frame& frame, int w, int p, int nvars, int degree_bound) {
  std::vector<HVector> out;
  for (int j = std::max(0, p + w); j <= frame.r(); ++j) {
    std::vector<Rational> v = frame.tilde_basis(j);
    out.push_back(HVector::constant(v, nvars, degree_bound));
  }
  return out;
}

OppositeCheck is_opposite(const Frame& frame, const std::vector<std::vector<Rational>>& leads,
                          const std::vector<int>& lead_weights) {
  if (leads.size() != lead_weights.size()) throw StructuralError("is_opposite: leads and weights differ in length");
  const auto dim = static_cast<std::size_t>(frame.dim());
  for (int p = -1; p <= frame.r(); ++p) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < leads.size(); ++j)
      if (lead_weights[j] <= p) cols.push_back(leads[j]);
    for (int j = p + 1; j <= frame.r(); ++j) cols.push_back(frame.tilde_basis(j));
    if (cols.size() != dim || rank_of_columns(cols, dim) != dim) return {false, p};
  }
  return {};
}

OppositeCheck is_opposite(const Frame& frame, const Lattice& lat) {
  if (frame.dim() != lat.system().dim()) throw StructuralError("is_opposite: frame and lattice sizes differ");
  std::vector<std::vector<Rational>> leads;
  std::vector<int> weights;
  for (int j = 0; j < lat.rank(); ++j) {
    leads.push_back(lat.lead(j).at_origin());
    weights.push_back(lat.lead_weight(j));
  }
  return is_opposite(frame, leads, weights);
}

SplitResult split(const HVector& x, const std::vector<HVector>& f_basis, const std::vector<HVector>& u_basis,
                  PivotOrder order) {
  std::vector<HVector> cols = f_basis;
  cols.insert(cols.end(), u_basis.begin(), u_basis.end());
  UnitPivotSolution sol = solve_unit_pivot(cols, x, order);
  if (!sol.exact()) throw DomainError("split: F and U bases do not span the input vector");
  SplitResult out{HVector(x.dim(), x.nvars(), x.degree_bound()), HVector(x.dim(), x.nvars(), x.degree_bound()), {}, {}};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Series& coef = sol.coefficients[c];
    if (c < f_basis.size()) {
      out.f_coefficients.push_back(coef);
      out.f_part += cols[c].scaled(coef);
    } else {
      out.u_coefficients.push_back(coef);
      out.u_part += cols[c].scaled(coef);
    }
  }
  return out;
}

}  // namespace brieskorn
