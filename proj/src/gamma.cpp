#include "brieskorn/gamma.hpp"

#include "brieskorn/canonical.hpp"

namespace brieskorn {

RationalMatrix params_matrix(const GammaParams<Rational>& p) {
  RationalMatrix m = RationalMatrix::identity(3);
  m(1, 0) = p.alpha;
  m(2, 0) = p.beta;
  m(2, 1) = p.gamma;
  return m;
}

GammaParams<Rational> params_from_matrix(const RationalMatrix& m) {
  if (m.rows() < 3 || !m.is_lower_unitriangular()) throw DomainError("params need a unit lower-triangular matrix of size >= 3");
  return {m(1, 0), m(2, 0), m(2, 1)};
}

GammaParams<Rational> params_from_frame(const Frame& frame) { return params_from_matrix(frame.matrix()); }

Series restrict_to_first_variable(const Series& f) {
  Series out(1, f.degree_bound());
  for (const auto& [e, c] : f.terms()) {
    bool pure = true;
    for (int i = 1; i < f.nvars(); ++i) pure = pure && e[static_cast<std::size_t>(i)] == 0;
    if (pure) out.add_term(exponents({e[0]}), c);
  }
  return out;
}

Series full_pipeline_action(const Frame& frame, const Series& h) {
  check_deformation_function(h);
  const int r = frame.r();
  const int n = h.degree_bound();
  GMSystem sys = GMSystem::constant(r, r + 2, n);
  Lattice lat = special_deformation(sys, h);
  // Only the weight-0 component enters g_1 and g~.
  CanonicalOptions opts;
  opts.bound = 0;
  HVector e0 = HVector::constant(frame.tilde_basis(0), sys.nvars(), n);
  CanonicalSolution sol = canonical_element(lat, frame, e0, 0, opts);
  HVector tilde = frame.to_tilde(sol.w.component(0));
  Series g1 = restrict_to_first_variable(tilde[1]);
  Series gt = restrict_to_first_variable(tilde[2]);
  return compose_univariate(gt, compositional_inverse(g1));
}

PolyRingPtr orbit_ring(int k) {
  std::vector<std::string> names{"alpha", "beta", "gamma"};
  for (int i = 2; i <= k; ++i) names.push_back("c" + std::to_string(i));
  return make_poly_ring(std::move(names));
}

std::vector<PolyElement> symbolic_orbit(int k) {
  if (k < 2) throw StructuralError("symbolic_orbit needs k >= 2");
  PolyRingPtr ring = orbit_ring(k);
  MultiSeries<PolyElement> h(1, k);
  for (int i = 2; i <= k; ++i) h.add_term(exponents({i}), PolyElement::variable(ring, "c" + std::to_string(i)));
  GammaParams<PolyElement> p{PolyElement::variable(ring, "alpha"), PolyElement::variable(ring, "beta"),
                             PolyElement::variable(ring, "gamma")};
  MultiSeries<PolyElement> ha = act_on_h(p, h);
  std::vector<PolyElement> out;
  for (int i = 2; i <= k; ++i) out.push_back(ha.coefficient(exponents({i})));
  return out;
}

OrbitPoint project_orbit(const Series& h, int k) {
  check_deformation_function(h);
  if (k < 1) throw StructuralError("project_orbit needs k >= 1");
  OrbitPoint out{k, {}};
  for (int i = 2; i <= k + 1; ++i) out.coeffs.push_back(h.coefficient(exponents({i})));
  return out;
}

OrbitPoint act_on_point(const GammaParams<Rational>& p, const OrbitPoint& x) {
  Series h(1, x.k + 1);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) h.add_term(exponents({static_cast<int>(i) + 2}), x.coeffs[i]);
  return project_orbit(act_on_h(p, h), x.k);
}

OrbitPoint project_point(const OrbitPoint& x, int m) {
  if (m < 1 || m > x.k) throw StructuralError("project_point: level outside 1..k");
  return {m, std::vector<Rational>(x.coeffs.begin(), x.coeffs.begin() + m)};
}

RationalMatrix orbit_jacobian(const Series& h, const std::vector<int>& levels) {
  check_deformation_function(h);
  int k = 2;
  for (int l : levels) k = std::max(k, l);
  std::vector<PolyElement> orbit = symbolic_orbit(k);
  std::vector<Rational> point(3, Rational(0));
  for (int i = 2; i <= k; ++i) point.push_back(h.coefficient(exponents({i})));
  RationalMatrix jac(levels.size(), 3);
  for (std::size_t row = 0; row < levels.size(); ++row) {
    if (levels[row] < 2) throw StructuralError("orbit_jacobian: levels start at 2");
    const PolyElement& c = orbit[static_cast<std::size_t>(levels[row] - 2)];
    for (std::size_t col = 0; col < 3; ++col) jac(row, col) = c.derivative(col).evaluate(point);
  }
  return jac;
}

}  // namespace brieskorn
