#include "brieskorn/series.hpp"

#include "brieskorn/literal.hpp"

namespace brieskorn {

template class MultiSeries<Rational>;

Series parse_series(std::string_view text, int nvars, int degree_bound) {
  Series out(nvars, degree_bound);
  for (const auto& term : literal::parse_terms(text)) {
    Exponents e{};
    for (const auto& [name, power] : term.factors) {
      int index = 0;
      if (name == "s" && nvars == 1) {
        index = 1;
      } else if (name.size() >= 2 && name[0] == 's' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        index = std::stoi(name.substr(1));
      }
      if (index < 1 || index > nvars)
        throw ParseError("unknown series variable '" + name + "' in '" + std::string(text) + "'");
      unsigned total = e[index - 1] + power;
      if (total > static_cast<unsigned>(kMaxSeriesDegree)) throw ParseError("exponent too large in '" + std::string(text) + "'");
      e[index - 1] = static_cast<std::uint8_t>(total);
    }
    out.add_term(e, term.coefficient);
  }
  return out;
}

Rational evaluate(const Series& f, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw StructuralError("evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (int v = 0; v < f.nvars(); ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    total += t;
  }
  return total;
}

}  // namespace brieskorn
