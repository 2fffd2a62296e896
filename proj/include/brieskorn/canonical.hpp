#pragma once

// Canonical lattice elements relative to an opposite filtration: the unique
// w in the lattice with w - dt^-p e in U^1 at every weight >= p, built weight
// by weight. Also the invariants (g_j, g~) read off the canonical v'_0 and
// the support of the resulting period map.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/lattice.hpp"
#include "brieskorn/opposite.hpp"

namespace brieskorn {

struct CanonicalOptions {
  /// Last weight solved; defaults to K.
  std::optional<int> bound;
  PivotOrder order = PivotOrder::Forward;
};

struct CanonicalSolution {
  GMElement w;
  /// Component of w - dt^-p e at each weight p..bound (each lies in U^1 there).
  std::map<int, HVector> u_terms;
  MembershipWitness witness;
  HVector target;
  int lead_weight = 0;
  int bound = 0;
};

/// Canonical element for the constant vector `e` (e-coordinates). With no
/// `p` given, p is the smallest j with a nonzero e~_j-coordinate of e.
/// DomainError when e has no F_0 representative modulo U^1 at weight p.
CanonicalSolution canonical_element(const Lattice& lat, const Frame& frame, const HVector& e,
                                    std::optional<int> p = std::nullopt, const CanonicalOptions& options = {});

/// One canonical element per e~_j, with p = j.
std::vector<CanonicalSolution> canonical_generators(const Lattice& lat, const Frame& frame,
                                                    const CanonicalOptions& options = {});

struct ResidualCheck {
  bool holds = true;
  std::optional<int> failing_weight;
  std::string detail;
};

/// Components of w - dt^-p e vanish below p and lie in span{e~_j : j >= q+1}
/// at each weight q in p..bound. Independent of the solver: uses e~-coordinates.
ResidualCheck check_residual_law(const CanonicalSolution& sol, const Frame& frame);

struct GenerationCheck {
  bool generates = true;
  std::optional<int> failing_generator;
  std::vector<MembershipWitness> witnesses;
};

/// Reduces every original generator against the canonical set through `bound`.
GenerationCheck check_generation(const Lattice& lat, const std::vector<CanonicalSolution>& canonical, int bound);

struct InvariantTuple {
  std::vector<Series> g;  // g_1..g_r
  Series g_tilde;

  /// d g_j / d s_i at 0 as an r x r matrix (row j-1, column i-1).
  RationalMatrix jacobian_at_origin() const;
  bool is_coordinate_system() const;
};

/// g_j = e~_j-coordinate of the weight j-1 component of w, g~ = e~_2-coordinate
/// of the weight 0 component. PrecisionError if sol is not known through r - 1.
InvariantTuple extract_invariants(const CanonicalSolution& sol, const Frame& frame);

struct PeriodSample {
  std::vector<Rational> point;
  std::vector<Rational> image;  // coefficients on the support, in support order
};

struct PeriodSupport {
  /// (weight, e-index) pairs where w_0 has a nonzero coefficient.
  std::set<std::pair<int, int>> support;
  std::vector<PeriodSample> samples;
  /// support inside C dt^-1 e_0 + sum_{1<=k<=j<=r} C dt^-k e_j.
  bool within_reference_span = false;
  std::vector<std::pair<int, int>> outside_reference_span;
  bool injective_on_samples = true;
};

PeriodSupport period_support(const Lattice& lat, const Frame& frame, const std::vector<std::vector<Rational>>& points,
                             const CanonicalOptions& options = {});

}  // namespace brieskorn
