#include <gtest/gtest.h>

#include <random>

#include "brieskorn/errors.hpp"
#include "brieskorn/opposite.hpp"
#include "support/oracles.hpp"

using namespace brieskorn;

namespace {

Frame random_frame(std::mt19937_64& rng, int r) {
  RationalMatrix a = RationalMatrix::identity(static_cast<std::size_t>(r + 1));
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < i; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = oracle::small_rational(rng);
  return Frame::from_matrix(a);
}

}  // namespace

TEST(Frame, TripleFrame) {
  Frame f = Frame::from_triple(3, 1, make_rational(-1, 2), 2);
  EXPECT_EQ(f.alpha(), 1);
  EXPECT_EQ(f.beta(), make_rational(-1, 2));
  EXPECT_EQ(f.gamma(), 2);
  EXPECT_EQ(f.matrix()(1, 0), 1);
  EXPECT_EQ(f.matrix()(2, 0), make_rational(-1, 2));
  EXPECT_EQ(f.matrix()(2, 1), 2);
  EXPECT_EQ(f.matrix()(3, 0), 0);
  EXPECT_EQ(f.matrix() * f.inverse(), RationalMatrix::identity(4));
  // e~_1 in e-coordinates is row 1 of A^-1.
  EXPECT_EQ(f.tilde_basis(1), (std::vector<Rational>{-1, 1, 0, 0}));
}

TEST(Frame, TildeCoordinatesReconstructVectors) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    Frame f = random_frame(rng, 4);
    std::vector<Rational> x;
    for (int i = 0; i <= 4; ++i) x.push_back(oracle::small_rational(rng));
    std::vector<Rational> tilde = f.to_tilde(x);
    std::vector<Rational> back(5, Rational(0));
    for (int j = 0; j <= 4; ++j) {
      std::vector<Rational> basis = f.tilde_basis(j);
      for (int i = 0; i <= 4; ++i) back[static_cast<std::size_t>(i)] += tilde[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(i)];
    }
    EXPECT_EQ(back, x);
  }
}

TEST(Frame, RejectsNonUnitriangularMatrices) {
  Frame f = Frame::from_triple(2, 1, 2, 3);
  EXPECT_THROW(Frame::from_matrix(f.matrix().transpose()), DomainError);
  RationalMatrix diag = RationalMatrix::identity(3);
  diag(1, 1) = 2;
  EXPECT_THROW(Frame::from_matrix(diag), DomainError);
  EXPECT_THROW(Frame::from_matrix(RationalMatrix(3, 2)), DomainError);
  EXPECT_THROW(Frame::from_matrix(RationalMatrix::identity(1)), DomainError);
}

TEST(Frame, ProductsStayInTheGroup) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    Frame a = random_frame(rng, 3), b = random_frame(rng, 3);
    Frame ab = a * b;
    EXPECT_EQ(ab.matrix(), a.matrix() * b.matrix());
    EXPECT_EQ(ab * Frame::identity(3), ab);
    EXPECT_EQ((a * b) * Frame::from_matrix(b.inverse()), a);
  }
}

TEST(Opposite, USubspaceShrinksWithWeight) {
  Frame f = Frame::identity(3);
  EXPECT_EQ(u_subspace(f, 0, 1, 3, 4).size(), 3u);
  EXPECT_EQ(u_subspace(f, 1, 1, 3, 4).size(), 2u);
  EXPECT_EQ(u_subspace(f, 3, 1, 3, 4).size(), 0u);
  EXPECT_EQ(u_subspace(f, 0, -1, 3, 4).size(), 4u);
}

TEST(Opposite, StandardLeadsAreOppositeToEveryFrame) {
  std::mt19937_64 rng(33);
  std::vector<std::vector<Rational>> leads;
  std::vector<int> weights;
  for (int j = 0; j <= 3; ++j) {
    std::vector<Rational> e(4, Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    leads.push_back(e);
    weights.push_back(j);
  }
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_opposite(random_frame(rng, 3), leads, weights).opposite);
  // Swapping the weights of e_0 and e_1 puts e_1 into F_0 at p = 0, where U^1 already holds it.
  std::swap(leads[0], leads[1]);
  OppositeCheck bad = is_opposite(Frame::identity(3), leads, weights);
  EXPECT_FALSE(bad.opposite);
  ASSERT_TRUE(bad.failing_p.has_value());
  EXPECT_EQ(*bad.failing_p, 0);
}

TEST(Opposite, SplitIsUniqueAndExact) {
  const int n = 4;
  HVector x(std::vector<Series>{parse_series("1 + s1", 2, n), parse_series("s2", 2, n), Series::constant(2, n, 3)});
  std::vector<HVector> f{HVector::basis(3, 2, n, 0)};
  std::vector<HVector> u{HVector::basis(3, 2, n, 1), HVector::basis(3, 2, n, 2)};
  SplitResult a = split(x, f, u, PivotOrder::Forward);
  SplitResult b = split(x, f, u, PivotOrder::Reverse);
  EXPECT_EQ(a.f_part[0], parse_series("1 + s1", 2, n));
  EXPECT_TRUE(a.f_part[1].is_zero());
  EXPECT_EQ(a.u_part + a.f_part, x);
  EXPECT_EQ(a.f_part, b.f_part);
  EXPECT_EQ(a.u_part, b.u_part);
  // A tilted F-direction: e_0 + s1 e_1.
  HVector tilt = HVector::basis(3, 2, n, 0);
  tilt[1] = parse_series("s1", 2, n);
  SplitResult c = split(x, {tilt}, {HVector::basis(3, 2, n, 1), HVector::basis(3, 2, n, 2)});
  EXPECT_EQ(c.f_coefficients[0], parse_series("1 + s1", 2, n));
  EXPECT_EQ(c.u_coefficients[0], parse_series("s2 - s1 - s1^2", 2, n));
}

TEST(Opposite, SplitRejectsDegenerateBases) {
  HVector x = HVector::basis(3, 1, 3, 2);
  EXPECT_THROW(split(x, {HVector::basis(3, 1, 3, 0)}, {HVector::basis(3, 1, 3, 0)}), DomainError);
  EXPECT_THROW(split(x, {HVector::basis(3, 1, 3, 0)}, {HVector::basis(3, 1, 3, 1)}), DomainError);
}
