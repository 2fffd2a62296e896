#pragma once

// Action of the unipotent frame group on deformation functions h in s^2 C[[s]]:
// h^A = g~ o g_1^{-1} with g_1 = (s + gamma h)/(1 + alpha s + beta h) and
// g~ = h/(1 + alpha s + beta h).

#include <string>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/opposite.hpp"
#include "brieskorn/poly.hpp"
#include "brieskorn/series.hpp"

namespace brieskorn {

template <CoefficientRing C>
struct GammaParams {
  C alpha = ring_traits<C>::zero();
  C beta = ring_traits<C>::zero();
  C gamma = ring_traits<C>::zero();

  friend bool operator==(const GammaParams& a, const GammaParams& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
};

/// Throws DomainError unless h is univariate with h(0) = h'(0) = 0.
template <CoefficientRing C>
void check_deformation_function(const MultiSeries<C>& h) {
  if (h.nvars() != 1) throw StructuralError("deformation function must be univariate");
  if (!ring_traits<C>::is_zero(h.coefficient(exponents({0}))) || !ring_traits<C>::is_zero(h.coefficient(exponents({1}))))
    throw DomainError("deformation function needs h(0) = h'(0) = 0");
}

/// The pair (g_1, g~) obtained by normalizing the e~_0-coefficient to 1.
template <CoefficientRing C>
struct NormalForm {
  MultiSeries<C> g1;
  MultiSeries<C> g_tilde;
};

template <CoefficientRing C>
NormalForm<C> normal_form(const GammaParams<C>& p, const MultiSeries<C>& h) {
  check_deformation_function(h);
  const int n = h.degree_bound();
  MultiSeries<C> s = MultiSeries<C>::variable(1, n, 1);
  MultiSeries<C> denom = MultiSeries<C>::one(1, n) + s.scaled(p.alpha) + h.scaled(p.beta);
  // Constant term is exactly 1, so the inversion never divides by a non-unit.
  MultiSeries<C> u = unit_inverse(denom);
  return {u * (s + h.scaled(p.gamma)), u * h};
}

/// h^A, exact through the degree bound of h.
template <CoefficientRing C>
MultiSeries<C> act_on_h(const GammaParams<C>& p, const MultiSeries<C>& h) {
  NormalForm<C> nf = normal_form(p, h);
  return compose_univariate(nf.g_tilde, compositional_inverse(nf.g1));
}

/// Parameters of the product matrix M(p) * M(q): acting by p and then by q.
template <CoefficientRing C>
GammaParams<C> compose_params(const GammaParams<C>& p, const GammaParams<C>& q) {
  return {C(p.alpha + q.alpha), C(p.beta + q.beta + p.gamma * q.alpha), C(p.gamma + q.gamma)};
}

template <CoefficientRing C>
GammaParams<C> inverse_params(const GammaParams<C>& p) {
  return {C(-p.alpha), C(-p.beta + p.gamma * p.alpha), C(-p.gamma)};
}

/// [[1,0,0],[alpha,1,0],[beta,gamma,1]].
RationalMatrix params_matrix(const GammaParams<Rational>& p);
GammaParams<Rational> params_from_matrix(const RationalMatrix& m);
GammaParams<Rational> params_from_frame(const Frame& frame);

/// Builds the special lattice for h (r = frame.r(), series degree of h),
/// solves the canonical v'_0 for the frame, and returns g~ o g_1^{-1}.
Series full_pipeline_action(const Frame& frame, const Series& h);

/// Univariate restriction s_2 = ... = s_n = 0 of a series in s_1..s_n.
Series restrict_to_first_variable(const Series& f);

/// Indeterminates alpha, beta, gamma, c2..ck.
PolyRingPtr orbit_ring(int k);

/// c^A_2..c^A_k as polynomials in alpha, beta, gamma, c2..ck.
std::vector<PolyElement> symbolic_orbit(int k);

/// A point of A_k = s^2 C[[s]] / s^{k+2}: the coefficients c_2..c_{k+1}.
struct OrbitPoint {
  int k = 0;
  std::vector<Rational> coeffs;
  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

OrbitPoint project_orbit(const Series& h, int k);
/// Action on A_k through the polynomial representative of the point.
OrbitPoint act_on_point(const GammaParams<Rational>& p, const OrbitPoint& x);
/// Further truncation A_k -> A_m for m <= k.
OrbitPoint project_point(const OrbitPoint& x, int m);

/// Jacobian of (alpha, beta, gamma) -> (c^A_l for l in levels) at params 0.
RationalMatrix orbit_jacobian(const Series& h, const std::vector<int>& levels);

}  // namespace brieskorn
