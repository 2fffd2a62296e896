#pragma once

// Deformations B_S = sum_j O_S{{dt^-1}} v_j inside G_S: the three families,
// membership by weight-graded division, and the Hodge filtration F_0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/gmsystem.hpp"
#include "brieskorn/unit_pivot.hpp"

namespace brieskorn {

/// Deformation of special type: h(s_1) with h(0) = h'(0) = 0. The stored
/// terms of h are taken as the whole function.
struct SpecialDeformation {
  Series h;  // univariate
};

/// One-parameter family extended over C^r: h_i(s_1) for i = 2..r with
/// ord(h_i) = i exactly. h[0] is h_2.
struct RelativeFamilySpec {
  std::vector<Series> h;  // univariate, size r - 1
};

enum class FamilyKind { Generic, Special, Nilpotent, Relative };

std::string to_string(FamilyKind kind);

class Lattice;

/// coeffs[j][k] is the O_S coefficient of dt^-k v_j.
struct MembershipWitness {
  std::vector<std::map<int, Series>> coeffs;

  GMElement expand(const Lattice& lattice) const;
  /// One line per generator: `v<j> : c*dt^-k + ...`.
  std::string to_string() const;
};

struct ReduceResult {
  bool member = false;
  MembershipWitness witness;
  /// What is left of the input after subtracting the witness, through the bound.
  GMElement residual;
  std::optional<int> residual_weight;
};

class Lattice {
 public:
  /// Generic lattice. The leading HVectors (lowest-weight components) must
  /// be linearly independent at s = 0, otherwise DomainError.
  Lattice(GMSystem system, std::vector<GMElement> generators);

  const GMSystem& system() const { return system_; }
  const std::vector<GMElement>& generators() const { return generators_; }
  const GMElement& generator(int j) const { return generators_.at(static_cast<std::size_t>(j)); }
  int rank() const { return static_cast<int>(generators_.size()); }
  int lead_weight(int j) const { return lead_weights_.at(static_cast<std::size_t>(j)); }
  const HVector& lead(int j) const { return leads_.at(static_cast<std::size_t>(j)); }

  FamilyKind kind() const { return kind_; }
  const std::optional<SpecialDeformation>& special() const { return special_; }
  const std::optional<RelativeFamilySpec>& relative() const { return relative_; }

  /// Generators whose lead weight is <= w, in generator order.
  std::vector<int> leading_by(int w) const;
  /// O_S-basis of F_0 at weight w: the leads L_j with lead weight <= w.
  std::vector<HVector> hodge_filtration(int w) const;

  /// Membership of x in the lattice, checked through weight `bound`.
  ReduceResult reduce(const GMElement& x, int bound, PivotOrder order = PivotOrder::Forward) const;

  /// Copy with every series truncated to `degree` (for comparing derivatives).
  Lattice with_series_bound(int degree) const;
  /// Copy with generators evaluated at s = 0.
  Lattice at_origin() const;
  /// Copy with generator j replaced; family metadata is kept, so the
  /// family's closed forms are still checked against the new generator.
  Lattice with_generator(int j, GMElement g) const;

 private:
  friend Lattice special_deformation(const GMSystem&, const Series&);
  friend Lattice nilpotent_family(const GMSystem&);
  friend Lattice relative_family(const GMSystem&, const RelativeFamilySpec&);

  GMSystem system_;
  std::vector<GMElement> generators_;
  std::vector<int> lead_weights_;
  std::vector<HVector> leads_;
  FamilyKind kind_ = FamilyKind::Generic;
  std::optional<SpecialDeformation> special_;
  std::optional<RelativeFamilySpec> relative_;
};

/// v_0 = e_0 + sum_j s_j dt^{1-j} e_j + h(s_1) e_2, v_1 = dt^-1(e_1 + h' e_2),
/// v_j = dt^-j e_j. Requires N = 0, nvars = r >= 2, h(0) = h'(0) = 0.
Lattice special_deformation(const GMSystem& sys, const Series& h);

/// v_j = prod_i exp(s_i dt^{1-i} N^i) dt^-j e_j with N the shift matrix.
Lattice nilpotent_family(const GMSystem& sys);

/// Generators dt^-j d_{s_1}^j v_0 (j = 0..r) of the relative family.
Lattice relative_family(const GMSystem& sys, const RelativeFamilySpec& spec);

/// v_0 of the relative family.
GMElement relative_primitive(const GMSystem& sys, const RelativeFamilySpec& spec);

/// Closed form of dt^-j d_{s_1}^j v_0 for the relative family (exact through
/// the series bound, no numerical differentiation of truncated data).
GMElement relative_generator(const GMSystem& sys, const RelativeFamilySpec& spec, int j);

/// (t - dt^-1) v_0 of the relative family, summed termwise:
/// sum_nu sum_i (||nu|| - |nu|) h_i^(||nu||) s^nu/nu! dt^{|nu|-||nu||-1} e_i.
GMElement relative_t_defect(const GMSystem& sys, const RelativeFamilySpec& spec);

/// Checks ord(h_i) = i and the univariate shape; DomainError otherwise.
void validate_relative_spec(const GMSystem& sys, const RelativeFamilySpec& spec);

/// Checks h(0) = h'(0) = 0 and the univariate shape; DomainError otherwise.
void validate_deformation_function(const Series& h);

}  // namespace brieskorn
