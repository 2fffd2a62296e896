#include <gtest/gtest.h>

#include <random>

#include "brieskorn/errors.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/stability.hpp"
#include "support/oracles.hpp"

using namespace brieskorn;

namespace {

Series random_h(std::mt19937_64& rng, int n) {
  Series h(1, n);
  for (int k = 2; k <= n; ++k) h.add_term(exponents({k}), oracle::small_rational(rng));
  return h;
}

RelativeFamilySpec random_relative(std::mt19937_64& rng, int r, int n) {
  RelativeFamilySpec spec;
  for (int i = 2; i <= r; ++i) {
    Series hi(1, n);
    Rational lead = oracle::small_rational(rng);
    if (lead == 0) lead = 1;
    hi.add_term(exponents({i}), lead);
    for (int k = i + 1; k <= n; ++k) hi.add_term(exponents({k}), oracle::small_rational(rng));
    spec.h.push_back(hi);
  }
  return spec;
}

GMElement random_combination(const Lattice& lat, std::mt19937_64& rng, int max_shift) {
  const GMSystem& sys = lat.system();
  GMElement x = sys.zero();
  for (int j = 0; j < lat.rank(); ++j)
    for (int k = 0; k <= max_shift; ++k)
      x += lat.generator(j).shifted(k).scaled(oracle::random_series(rng, sys.nvars(), sys.degree_bound(), 3));
  return x;
}

}  // namespace

TEST(Lattice, SpecialFamilyIsStable) {
  GMSystem sys = GMSystem::constant(4, 8, 8);
  Lattice lat = special_deformation(sys, parse_series("s^2 + s^3", 1, 8));
  EXPECT_EQ(lat.kind(), FamilyKind::Special);
  StabilityReport report = stability_check(lat);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.bound, 3);
  for (const auto* f : report.failures()) ADD_FAILURE() << f->name << ": " << f->detail;
}

TEST(Lattice, NilpotentFamilyIsStable) {
  GMSystem sys = GMSystem::shifted(5, 10, 6);
  StabilityReport report = stability_check(nilpotent_family(sys));
  for (const auto* f : report.failures()) ADD_FAILURE() << f->name << ": " << f->detail;
  EXPECT_TRUE(report.passed());
}

TEST(Lattice, RelativeFamilyIsStable) {
  GMSystem sys = GMSystem::constant(4, 9, 7);
  RelativeFamilySpec spec{{parse_series("s^2 + 2*s^5", 1, 7), parse_series("s^3 - s^4", 1, 7),
                           parse_series("3*s^4", 1, 7)}};
  StabilityReport report = stability_check(relative_family(sys, spec));
  for (const auto* f : report.failures()) ADD_FAILURE() << f->name << ": " << f->detail;
  EXPECT_TRUE(report.passed());
}

TEST(Lattice, RandomParametersStayStable) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 4; ++t) {
    GMSystem sys = GMSystem::constant(3, 7, 6);
    EXPECT_TRUE(stability_check(special_deformation(sys, random_h(rng, 6))).passed());
    EXPECT_TRUE(stability_check(relative_family(sys, random_relative(rng, 3, 6))).passed());
  }
}

TEST(Lattice, ReduceExamples) {
  GMSystem sys = GMSystem::constant(4, 8, 8);
  Lattice lat = special_deformation(sys, parse_series("s^2 + s^3", 1, 8));
  // t v_1 = 2 dt^-1 v_1
  ReduceResult tv1 = lat.reduce(apply_t(sys, lat.generator(1)), 3);
  ASSERT_TRUE(tv1.member);
  EXPECT_EQ(tv1.witness.to_string(), "v0 : 0\nv1 : (2)*dt^-1\nv2 : 0\nv3 : 0\nv4 : 0\n");
  // e_1 sits below the lattice at weight 0.
  ReduceResult e1 = lat.reduce(sys.basis_element(0, 1), 3);
  EXPECT_FALSE(e1.member);
  ASSERT_TRUE(e1.residual_weight.has_value());
  EXPECT_EQ(*e1.residual_weight, 0);
  EXPECT_TRUE(lat.reduce(sys.basis_element(2, 0), 3).member);
  // Negative weights are never members.
  EXPECT_FALSE(lat.reduce(sys.basis_element(0, 0).shifted(-1), 3).member);
}

TEST(Lattice, WitnessesAreSound) {
  std::mt19937_64 rng(22);
  GMSystem sys = GMSystem::shifted(3, 10, 5);
  Lattice lat = nilpotent_family(sys);
  for (int t = 0; t < 5; ++t) {
    GMElement x = random_combination(lat, rng, 2);
    for (auto order : {PivotOrder::Forward, PivotOrder::Reverse}) {
      ReduceResult res = lat.reduce(x, 6, order);
      ASSERT_TRUE(res.member);
      EXPECT_TRUE(equal_through(res.witness.expand(lat), x, 6));
    }
    GMElement y = x + sys.basis_element(1, 2).scaled(sys.s(1));
    ReduceResult bad = lat.reduce(y, 6);
    EXPECT_FALSE(bad.member);
    EXPECT_FALSE(bad.residual.is_zero());
  }
}

TEST(Lattice, OriginLatticeIsClosed) {
  // At s = 0 every family is closed under t and dt^-1.
  std::mt19937_64 rng(23);
  GMSystem constant = GMSystem::constant(3, 9, 6);
  std::vector<Lattice> lats{special_deformation(constant, random_h(rng, 6)).at_origin(),
                            relative_family(constant, random_relative(rng, 3, 6)).at_origin(),
                            nilpotent_family(GMSystem::shifted(3, 9, 6)).at_origin()};
  for (const auto& lat : lats) {
    for (int t = 0; t < 3; ++t) {
      GMElement x = random_combination(lat, rng, 1).at_origin();
      EXPECT_TRUE(lat.reduce(apply_t(lat.system(), x), 5).member) << to_string(lat.kind());
      EXPECT_TRUE(lat.reduce(apply_dti(x), 5).member) << to_string(lat.kind());
    }
  }
}

TEST(Lattice, UndeformedLatticeSplitsByWeight) {
  GMSystem sys = GMSystem::constant(3, 8, 5);
  Lattice lat = special_deformation(sys, parse_series("s^2", 1, 5)).at_origin();
  for (int j = 0; j <= 3; ++j) {
    EXPECT_TRUE(lat.reduce(sys.basis_element(j, j), 4).member);
    for (int w = 0; w < j; ++w) EXPECT_FALSE(lat.reduce(sys.basis_element(w, j), 4).member) << w << "," << j;
  }
}

TEST(Lattice, HodgeFiltrationCollectsLeads) {
  GMSystem sys = GMSystem::constant(3, 8, 5);
  Lattice lat = special_deformation(sys, parse_series("s^2", 1, 5));
  EXPECT_EQ(lat.leading_by(0), std::vector<int>{0});
  EXPECT_EQ(lat.leading_by(2), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(lat.hodge_filtration(3).size(), 4u);
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(lat.lead_weight(j), j);
  EXPECT_EQ(lat.lead(1)[1].to_string(), "1");
  EXPECT_EQ(lat.lead(1)[2].to_string(), "2*s1");
}

TEST(Lattice, OriginValueOfRelativeDerivatives) {
  GMSystem sys = GMSystem::constant(4, 9, 7);
  // Monomial h_i: only the diagonal term survives.
  RelativeFamilySpec mono{{parse_series("2*s^2", 1, 7), parse_series("-s^3", 1, 7), parse_series("s^4", 1, 7)}};
  Lattice a = relative_family(sys, mono);
  for (int j = 2; j <= 4; ++j) {
    RelativeOriginValue v = relative_origin_value(a, j);
    EXPECT_TRUE(v.matches_prediction);
    EXPECT_TRUE(v.equals_diagonal) << j;
  }
  // h_2 with an s^3 term feeds dt^-3 e_2 into the j = 3 value.
  RelativeFamilySpec mixed{{parse_series("s^2 + s^3", 1, 7), parse_series("s^3", 1, 7), parse_series("s^4", 1, 7)}};
  RelativeOriginValue v = relative_origin_value(relative_family(sys, mixed), 3);
  EXPECT_TRUE(v.matches_prediction);
  EXPECT_FALSE(v.equals_diagonal);
  GMElement expected = sys.basis_element(3, 2).scaled(Rational(6)) + sys.basis_element(3, 3).scaled(Rational(6));
  EXPECT_TRUE(equal_through(v.value, expected, 5));
}

TEST(Lattice, RelativeGeneratorsMatchDerivatives) {
  GMSystem sys = GMSystem::constant(3, 9, 7);
  std::mt19937_64 rng(24);
  RelativeFamilySpec spec = random_relative(rng, 3, 7);
  GMElement v = relative_primitive(sys, spec);
  for (int j = 1; j <= 3; ++j) {
    v = apply_dti_dsi(v, 1);
    GMElement closed = relative_generator(sys, spec, j);
    EXPECT_TRUE(equal_through(v.truncate_series(7 - j), closed.truncate_series(7 - j), 5)) << j;
  }
}

TEST(Lattice, PerturbedGeneratorBreaksStability) {
  GMSystem sys = GMSystem::constant(3, 8, 6);
  Lattice lat = special_deformation(sys, parse_series("s^2", 1, 6));
  GMElement g = lat.generator(1) + sys.basis_element(1, 3).scaled(sys.s(1) * sys.s(1));
  StabilityReport report = stability_check(lat.with_generator(1, g));
  EXPECT_FALSE(report.passed());
  ASSERT_FALSE(report.failures().empty());
  EXPECT_TRUE(report.failures().front()->residual.has_value());
}

TEST(Lattice, InvalidInputsAreRejected) {
  GMSystem sys = GMSystem::constant(3, 8, 6);
  EXPECT_THROW(special_deformation(sys, parse_series("s", 1, 6)), DomainError);
  EXPECT_THROW(special_deformation(sys, parse_series("1 + s^2", 1, 6)), DomainError);
  EXPECT_THROW(special_deformation(GMSystem::shifted(3, 8, 6), parse_series("s^2", 1, 6)), DomainError);
  RelativeFamilySpec wrong_order{{parse_series("s^3", 1, 6), parse_series("s^3", 1, 6)}};
  EXPECT_THROW(relative_family(sys, wrong_order), DomainError);
  // Leads that coincide at s = 0.
  std::vector<GMElement> gens{sys.basis_element(0, 0), sys.basis_element(1, 0), sys.basis_element(2, 2),
                              sys.basis_element(3, 3)};
  EXPECT_THROW(Lattice(sys, gens), DomainError);
  Lattice lat = special_deformation(sys, parse_series("s^2", 1, 6));
  EXPECT_THROW(lat.reduce(sys.basis_element(0, 0), 9), PrecisionError);
}
