#pragma once

#include <concepts>
#include <string>

#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

// Per-type hooks that turn a value type into a coefficient ring for
// MultiSeries. Specialized for Rational here and for PolyElement in poly.hpp.
template <typename C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_unit(const Rational& a) { return sgn(a) != 0; }
  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw DomainError("inverse of zero rational");
    return Rational(1) / a;
  }
  static Rational from_rational(const Rational& q) { return q; }
  // Text used inside series literals; rationals need no grouping.
  static std::string to_string(const Rational& a) { return brieskorn::to_string(a); }
  static bool needs_grouping(const Rational&) { return false; }
};

template <typename C>
concept CoefficientRing = std::regular<C> && requires(const C& a, const C& b, const Rational& q) {
  { C(a + b) };
  { C(a - b) };
  { C(a * b) };
  { C(-a) };
  { ring_traits<C>::zero() } -> std::convertible_to<C>;
  { ring_traits<C>::one() } -> std::convertible_to<C>;
  { ring_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
  { ring_traits<C>::is_unit(a) } -> std::convertible_to<bool>;
  { ring_traits<C>::inverse(a) } -> std::convertible_to<C>;
  { ring_traits<C>::from_rational(q) } -> std::convertible_to<C>;
  { ring_traits<C>::to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace brieskorn
