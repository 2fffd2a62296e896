#pragma once

// Closure of a lattice under t, dt^-1 and dt^-1 d_{s_i}, plus the closed-form
// identities each family is known to satisfy.

#include <optional>
#include <string>
#include <vector>

#include "brieskorn/lattice.hpp"

namespace brieskorn {

enum class CheckKind { Membership, ClosedForm };

struct StabilityCheck {
  CheckKind kind = CheckKind::Membership;
  /// e.g. "t*v0", "dt^-1*d_s2*v1", "t*v0 = dt^-1*v0 + sum (j-1) s_j v_j".
  std::string name;
  bool passed = false;
  /// Weight bound and series degree the comparison used.
  int bound = 0;
  int series_degree = 0;
  std::optional<MembershipWitness> witness;
  /// Failing residual (membership) or lhs - rhs (closed form).
  std::optional<GMElement> residual;
  std::optional<int> residual_weight;
  std::string detail;
};

struct StabilityReport {
  FamilyKind family = FamilyKind::Generic;
  int bound = 0;
  std::vector<StabilityCheck> checks;

  bool passed() const;
  std::vector<const StabilityCheck*> failures() const;
};

/// Membership of t*v_j, dt^-1*v_j, dt^-1*d_{s_i}*v_j through `bound`
/// (default K - r - 1) and the family's closed forms. Anything involving a
/// d_s derivative is compared at series degree N - 1.
StabilityReport stability_check(const Lattice& lat, std::optional<int> bound = std::nullopt);

/// Value of dt^-1 d_{s_j} v_0 at s = 0 for the relative family, and whether it
/// reduces to the single term h_j^(j)(0) dt^-j e_j.
struct RelativeOriginValue {
  int j = 0;
  GMElement value;
  GMElement predicted;       // sum_{i=2}^j h_i^(j)(0) dt^-j e_i
  GMElement diagonal_term;   // h_j^(j)(0) dt^-j e_j
  bool matches_prediction = false;
  bool equals_diagonal = false;
};
RelativeOriginValue relative_origin_value(const Lattice& lat, int j);

}  // namespace brieskorn
