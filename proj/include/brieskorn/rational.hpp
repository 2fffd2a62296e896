#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace brieskorn {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" (surrounding whitespace allowed).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// num/den in lowest terms. Use instead of Rational(num, den), which gmpxx
/// leaves unreduced.
inline Rational make_rational(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace brieskorn
