#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/ring.hpp"

namespace brieskorn {

/// Ordered list of indeterminate names for a polynomial ring over Q.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::vector<std::string> names);

/// Polynomial with rational coefficients.
///
/// Monomials are exponent vectors with trailing zeros trimmed, so the
/// constant monomial is the empty vector in every ring. A polynomial built
/// from a plain number carries no ring and combines with any other
/// polynomial; two polynomials with different non-null rings do not mix.
class PolyElement {
 public:
  using Monomial = std::vector<std::uint32_t>;

  PolyElement() = default;
  PolyElement(int value) : PolyElement(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  PolyElement(const Rational& value);                       // NOLINT(google-explicit-constructor)

  static PolyElement variable(PolyRingPtr ring, std::size_t index);
  static PolyElement variable(PolyRingPtr ring, std::string_view name);
  static PolyElement constant(PolyRingPtr ring, const Rational& value);
  /// Sum-of-monomials literal over the names of `ring`, e.g. "c3 + alpha*c2 - 2*gamma*c2^2".
  static PolyElement parse(PolyRingPtr ring, std::string_view text);

  const PolyRingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;

  PolyElement operator-() const;
  friend PolyElement operator+(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator-(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
  PolyElement& operator+=(const PolyElement& b) { return *this = *this + b; }
  PolyElement& operator-=(const PolyElement& b) { return *this = *this - b; }
  PolyElement& operator*=(const PolyElement& b) { return *this = *this * b; }

  friend bool operator==(const PolyElement& a, const PolyElement& b);

  /// Substitutes values[i] for indeterminate i. values.size() must equal the ring size.
  Rational evaluate(std::span<const Rational> values) const;
  PolyElement derivative(std::size_t index) const;

  /// Terms in descending lexicographic monomial order.
  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

template <>
struct ring_traits<PolyElement> {
  static PolyElement zero() { return PolyElement(); }
  static PolyElement one() { return PolyElement(1); }
  static bool is_zero(const PolyElement& a) { return a.is_zero(); }
  // Units of Q[x1..xn] are the nonzero constants.
  static bool is_unit(const PolyElement& a) { return a.is_constant() && !a.is_zero(); }
  static PolyElement inverse(const PolyElement& a);
  static PolyElement from_rational(const Rational& q) { return PolyElement(q); }
  static std::string to_string(const PolyElement& a) { return a.to_string(); }
  static bool needs_grouping(const PolyElement& a) { return a.terms().size() > 1; }
};

}  // namespace brieskorn
