#include <gtest/gtest.h>

#include <random>

#include "brieskorn/errors.hpp"
#include "brieskorn/gamma.hpp"
#include "support/oracles.hpp"

using namespace brieskorn;

namespace {

using Params = GammaParams<Rational>;

Params random_params(std::mt19937_64& rng) {
  return {oracle::small_rational(rng), oracle::small_rational(rng), oracle::small_rational(rng)};
}

Series random_h(std::mt19937_64& rng, int n) {
  Series h(1, n);
  for (int k = 2; k <= n; ++k) h.add_term(exponents({k}), oracle::small_rational(rng));
  return h;
}

// d/d(eps) at 0 of coefficient `level` of the oracle action along `direction`,
// from exact interpolation of the polynomial eps -> [s^level] act(eps * direction).
Rational oracle_derivative(const oracle::Dense& h, int direction, int level) {
  const int samples = 12;
  std::vector<Rational> xs, ys;
  for (int m = 1; m <= samples; ++m) {
    Rational eps(m);
    Rational p[3] = {0, 0, 0};
    p[direction] = eps;
    xs.push_back(eps);
    ys.push_back(oracle::act(p[0], p[1], p[2], h)[static_cast<std::size_t>(level)]);
  }
  // Linear coefficient of the interpolating polynomial: sum_m y_m * L_m'(0).
  Rational out = 0;
  for (int m = 0; m < samples; ++m) {
    Rational denom = 1;
    for (int k = 0; k < samples; ++k)
      if (k != m) denom *= xs[static_cast<std::size_t>(m)] - xs[static_cast<std::size_t>(k)];
    // L_m(x) = prod_{k != m} (x - x_k) / denom; its x-coefficient at 0.
    Rational lin = 0;
    for (int skip = 0; skip < samples; ++skip) {
      if (skip == m) continue;
      Rational prod = 1;
      for (int k = 0; k < samples; ++k)
        if (k != m && k != skip) prod *= -xs[static_cast<std::size_t>(k)];
      lin += prod;
    }
    out += ys[static_cast<std::size_t>(m)] * lin / denom;
  }
  return out;
}

}  // namespace

TEST(Gamma, ActionMatchesTheOracle) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    Params p = random_params(rng);
    Series h = random_h(rng, 8);
    oracle::Dense expected = oracle::act(p.alpha, p.beta, p.gamma, oracle::from_series(h));
    EXPECT_EQ(oracle::from_series(act_on_h(p, h)), expected);
  }
}

TEST(Gamma, GammaDirectionGivesSignedCatalanNumbers) {
  const int n = 12;
  Series ha = act_on_h(Params{0, 0, 1}, parse_series("s^2", 1, n));
  for (int m = 2; m <= n; ++m) {
    Rational expected = make_rational(2, m) * oracle::binomial(2 * m - 3, m - 2) * (m % 2 == 0 ? 1 : -1);
    EXPECT_EQ(ha.coefficient(exponents({m})), expected) << m;
  }
}

TEST(Gamma, AlphaDirectionExample) {
  Series ha = act_on_h(Params{1, 0, 0}, parse_series("s^2", 1, 4));
  EXPECT_EQ(ha.coefficient(exponents({2})), 1);
  EXPECT_EQ(ha.coefficient(exponents({3})), 1);
}

TEST(Gamma, ComposeExample) {
  Params c = compose_params(Params{1, 2, 3}, Params{4, 5, 6});
  EXPECT_EQ(c, (Params{5, 19, 9}));
  EXPECT_EQ(params_matrix(c), params_matrix(Params{1, 2, 3}) * params_matrix(Params{4, 5, 6}));
}

TEST(Gamma, GroupLaws) {
  std::mt19937_64 rng(52);
  const Params id{0, 0, 0};
  for (int t = 0; t < 30; ++t) {
    Params p = random_params(rng), q = random_params(rng), w = random_params(rng);
    Series h = random_h(rng, 7);
    EXPECT_EQ(act_on_h(q, act_on_h(p, h)), act_on_h(compose_params(p, q), h));
    EXPECT_EQ(compose_params(compose_params(p, q), w), compose_params(p, compose_params(q, w)));
    EXPECT_EQ(compose_params(p, inverse_params(p)), id);
    EXPECT_EQ(compose_params(inverse_params(p), p), id);
    EXPECT_EQ(act_on_h(id, h), h);
    EXPECT_EQ(act_on_h(inverse_params(p), act_on_h(p, h)), h);
    EXPECT_EQ(params_from_matrix(params_matrix(p)), p);
  }
}

TEST(Gamma, LowOrderOrbitPolynomials) {
  std::vector<PolyElement> orbit = symbolic_orbit(5);
  ASSERT_EQ(orbit.size(), 4u);
  PolyRingPtr ring = orbit[0].ring();
  EXPECT_EQ(orbit[0], PolyElement::parse(ring, "c2"));
  EXPECT_EQ(orbit[1], PolyElement::parse(ring, "c3 + alpha*c2 - 2*gamma*c2^2"));
  for (const auto& c : orbit)
    for (const auto& [m, q] : c.terms()) EXPECT_EQ(q.get_den(), 1) << c.to_string();
}

TEST(Gamma, OrbitPolynomialsEvaluateToTheAction) {
  std::mt19937_64 rng(53);
  const int k = 6;
  std::vector<PolyElement> orbit = symbolic_orbit(k);
  for (int t = 0; t < 10; ++t) {
    Params p = random_params(rng);
    Series h = random_h(rng, k);
    std::vector<Rational> point{p.alpha, p.beta, p.gamma};
    for (int i = 2; i <= k; ++i) point.push_back(h.coefficient(exponents({i})));
    oracle::Dense expected = oracle::act(p.alpha, p.beta, p.gamma, oracle::from_series(h));
    for (int i = 2; i <= k; ++i)
      EXPECT_EQ(orbit[static_cast<std::size_t>(i - 2)].evaluate(point), expected[static_cast<std::size_t>(i)]);
  }
}

TEST(Gamma, TruncatedPointsAndEquivariance) {
  OrbitPoint x = project_orbit(parse_series("s^2 + 7*s^5", 1, 6), 2);
  EXPECT_EQ(x.coeffs, (std::vector<Rational>{1, 0}));
  EXPECT_THROW(project_orbit(parse_series("s", 1, 4), 2), DomainError);

  std::mt19937_64 rng(54);
  for (int t = 0; t < 20; ++t) {
    Params p = random_params(rng);
    OrbitPoint y = project_orbit(random_h(rng, 7), 5);
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(project_point(act_on_point(p, y), m), act_on_point(p, project_point(y, m)));
    // c2 is invariant.
    EXPECT_EQ(act_on_point(p, y).coeffs[0], y.coeffs[0]);
  }
}

TEST(Gamma, OrbitJacobianRank) {
  Series h = parse_series("s^2 + s^3", 1, 8);
  RationalMatrix j35 = orbit_jacobian(h, {3, 4, 5});
  RationalMatrix j36 = orbit_jacobian(h, {3, 4, 5, 6});
  EXPECT_EQ(j35.rank(), 2u);
  EXPECT_EQ(j36.rank(), 3u);
  oracle::Dense dense = oracle::from_series(h);
  for (std::size_t row = 0; row < 4; ++row)
    for (int dir = 0; dir < 3; ++dir)
      EXPECT_EQ(j36(row, static_cast<std::size_t>(dir)), oracle_derivative(dense, dir, static_cast<int>(row) + 3))
          << "level " << row + 3 << " direction " << dir;
  EXPECT_EQ(j36, RationalMatrix({{1, 0, -2}, {2, 1, -5}, {0, 3, -3}, {0, 2, 0}}));
  // A conic has a one-dimensional stabilizer.
  EXPECT_EQ(orbit_jacobian(parse_series("s^2", 1, 8), {3, 4, 5, 6, 7}).rank(), 2u);
}

TEST(Gamma, RankDefectRelationThroughLevelFive) {
  // gamma + 2 c2 alpha + (c3 / c2) beta kills the derivatives of c^A_3..c^A_5.
  std::mt19937_64 rng(55);
  for (int t = 0; t < 10; ++t) {
    Series h = random_h(rng, 7);
    Rational c2 = h.coefficient(exponents({2}));
    if (c2 == 0) continue;
    Rational c3 = h.coefficient(exponents({3}));
    RationalMatrix jac = orbit_jacobian(h, {3, 4, 5});
    for (std::size_t row = 0; row < 3; ++row)
      EXPECT_EQ(Rational(2 * c2 * jac(row, 0) + (c3 / c2) * jac(row, 1) + jac(row, 2)), 0);
  }
}
