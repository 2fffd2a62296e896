#pragma once

// Tokenizer for the sum-of-monomials text form shared by series and
// polynomial literals: terms `c * x^a * y^b` joined by `+` / `-`.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn::literal {

struct Term {
  Rational coefficient{1};
  std::vector<std::pair<std::string, unsigned>> factors;  // identifier, exponent
};

/// Throws ParseError with the offending column on malformed input.
std::vector<Term> parse_terms(std::string_view text);

}  // namespace brieskorn::literal
