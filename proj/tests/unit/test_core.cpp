#include <gtest/gtest.h>

#include <random>

#include "brieskorn/errors.hpp"
#include "brieskorn/literal.hpp"
#include "brieskorn/matrix.hpp"
#include "brieskorn/poly.hpp"
#include "support/oracles.hpp"

using namespace brieskorn;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational(" +4/2 "), Rational(2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("3/"), ParseError);
  EXPECT_THROW(parse_rational("a"), ParseError);
}

TEST(Rational, MakeRationalCanonicalizes) {
  Rational a = make_rational(3, 3);
  EXPECT_EQ(a, Rational(1));
  EXPECT_EQ(a + 1, Rational(2));
}

TEST(Literal, SplitsTermsAndFactors) {
  auto terms = literal::parse_terms("1 - 2/3*s1^2*s2 + x");
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].coefficient, Rational(1));
  EXPECT_TRUE(terms[0].factors.empty());
  EXPECT_EQ(terms[1].coefficient, make_rational(-2, 3));
  ASSERT_EQ(terms[1].factors.size(), 2u);
  EXPECT_EQ(terms[1].factors[0], (std::pair<std::string, unsigned>{"s1", 2}));
  EXPECT_EQ(terms[2].factors[0].first, "x");
}

TEST(Literal, ReportsColumn) {
  try {
    literal::parse_terms("s1 + * 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
  }
}

TEST(Poly, ParsePrintRoundTrip) {
  auto ring = make_poly_ring({"alpha", "beta", "gamma", "c2", "c3"});
  PolyElement p = PolyElement::parse(ring, "c3 + alpha*c2 - 2*gamma*c2^2");
  EXPECT_EQ(p.to_string(), "alpha*c2 - 2*gamma*c2^2 + c3");
  EXPECT_EQ(PolyElement::parse(ring, p.to_string()), p);
}

TEST(Poly, RingAxiomsOnRandomElements) {
  auto ring = make_poly_ring({"x", "y", "z"});
  std::mt19937_64 rng(11);
  auto random_poly = [&] {
    PolyElement out;
    std::uniform_int_distribution<int> e(0, 2);
    for (int t = 0; t < 4; ++t) {
      PolyElement m = PolyElement::constant(ring, oracle::small_rational(rng));
      for (std::size_t v = 0; v < 3; ++v)
        for (int k = e(rng); k > 0; --k) m *= PolyElement::variable(ring, v);
      out += m;
    }
    return out;
  };
  for (int i = 0; i < 30; ++i) {
    PolyElement a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, PolyElement());
    EXPECT_EQ(a * PolyElement(1), a);
    // Leibniz rule
    EXPECT_EQ((a * b).derivative(0), a.derivative(0) * b + a * b.derivative(0));
  }
}

TEST(Poly, EvaluateAndDerivative) {
  auto ring = make_poly_ring({"x", "y"});
  PolyElement p = PolyElement::parse(ring, "3*x^2*y - y + 1/2");
  std::vector<Rational> pt{2, 5};
  EXPECT_EQ(p.evaluate(pt), Rational(60 - 5) + make_rational(1, 2));
  EXPECT_EQ(p.derivative(0), PolyElement::parse(ring, "6*x*y"));
  EXPECT_EQ(p.derivative(1), PolyElement::parse(ring, "3*x^2 - 1"));
}

TEST(Poly, DifferentRingsDoNotMix) {
  auto r1 = make_poly_ring({"x"});
  auto r2 = make_poly_ring({"y"});
  EXPECT_THROW(PolyElement::variable(r1, 0) + PolyElement::variable(r2, 0), StructuralError);
}

TEST(Matrix, UnitriangularInverseAndRank) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    RationalMatrix a = RationalMatrix::identity(5);
    for (std::size_t i = 1; i < 5; ++i)
      for (std::size_t j = 0; j < i; ++j) a(i, j) = oracle::small_rational(rng);
    RationalMatrix inv = a.unitriangular_inverse();
    EXPECT_EQ(a * inv, RationalMatrix::identity(5));
    EXPECT_EQ(inv * a, RationalMatrix::identity(5));
    EXPECT_EQ(a.rank(), 5u);
  }
  EXPECT_THROW(RationalMatrix::shift(3).unitriangular_inverse(), DomainError);
}

TEST(Matrix, ShiftIsNilpotent) {
  RationalMatrix n = RationalMatrix::shift(4);
  EXPECT_EQ(n(1, 0), Rational(1));
  EXPECT_FALSE(n.power(3).is_zero());
  EXPECT_TRUE(n.power(4).is_zero());
  EXPECT_EQ(n.rank(), 3u);
}
