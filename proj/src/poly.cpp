#include "brieskorn/poly.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"
#include "brieskorn/literal.hpp"

namespace brieskorn {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw StructuralError("duplicate indeterminate '" + names_[i] + "'");
}

std::size_t PolyRing::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

PolyRingPtr make_poly_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

namespace {

void trim(PolyElement::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

PolyRingPtr common_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->names() != b->names()) throw StructuralError("polynomials from different rings");
  return a;
}

PolyElement::Monomial multiply(const PolyElement::Monomial& a, const PolyElement::Monomial& b) {
  PolyElement::Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

PolyElement::PolyElement(const Rational& value) {
  if (sgn(value) != 0) terms_.emplace(Monomial{}, value);
}

PolyElement PolyElement::variable(PolyRingPtr ring, std::size_t index) {
  if (!ring || index >= ring->size()) throw StructuralError("indeterminate index out of range");
  PolyElement p;
  p.ring_ = std::move(ring);
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

PolyElement PolyElement::variable(PolyRingPtr ring, std::string_view name) {
  if (!ring) throw StructuralError("variable lookup without a ring");
  std::size_t index = ring->index_of(name);
  if (index == ring->size()) throw StructuralError("unknown indeterminate '" + std::string(name) + "'");
  return variable(std::move(ring), index);
}

PolyElement PolyElement::constant(PolyRingPtr ring, const Rational& value) {
  PolyElement p(value);
  p.ring_ = std::move(ring);
  return p;
}

PolyElement PolyElement::parse(PolyRingPtr ring, std::string_view text) {
  PolyElement result = constant(ring, Rational(0));
  for (const auto& term : literal::parse_terms(text)) {
    PolyElement t = constant(ring, term.coefficient);
    for (const auto& [name, exponent] : term.factors) {
      if (!ring || ring->index_of(name) == ring->size())
        throw ParseError("unknown indeterminate '" + name + "' in '" + std::string(text) + "'");
      PolyElement x = variable(ring, name);
      for (unsigned k = 0; k < exponent; ++k) t *= x;
    }
    result += t;
  }
  return result;
}

bool PolyElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PolyElement::constant_term() const { return coefficient(Monomial{}); }

Rational PolyElement::coefficient(const Monomial& m) const {
  Monomial key = m;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PolyElement::total_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (auto e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

PolyElement PolyElement::operator-() const {
  PolyElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

PolyElement operator+(const PolyElement& a, const PolyElement& b) {
  PolyElement out = a;
  out.ring_ = common_ring(a.ring_, b.ring_);
  for (const auto& [m, c] : b.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) out.terms_.erase(it);
    }
  }
  return out;
}

PolyElement operator-(const PolyElement& a, const PolyElement& b) { return a + (-b); }

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
  PolyElement out;
  out.ring_ = common_ring(a.ring_, b.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational product = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(multiply(ma, mb), product);
      if (!inserted) it->second += product;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

bool operator==(const PolyElement& a, const PolyElement& b) {
  if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && a.ring_->names() != b.ring_->names()) return false;
  return a.terms_ == b.terms_;
}

Rational PolyElement::evaluate(std::span<const Rational> values) const {
  std::size_t n = ring_ ? ring_->size() : 0;
  if (values.size() != n) throw StructuralError("evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= values[i];
    total += t;
  }
  return total;
}

PolyElement PolyElement::derivative(std::size_t index) const {
  if (ring_ && index >= ring_->size()) throw StructuralError("indeterminate index out of range");
  PolyElement out;
  out.ring_ = ring_;
  for (const auto& [m, c] : terms_) {
    if (index >= m.size() || m[index] == 0) continue;
    Monomial d = m;
    Rational coeff = c * Rational(d[index]);
    --d[index];
    trim(d);
    out.terms_[d] += coeff;
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::string PolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // std::map orders monomials ascending lexicographically; print descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring_->name(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) out += brieskorn::to_string(magnitude);
    else if (magnitude == 1) out += factors;
    else out += brieskorn::to_string(magnitude) + "*" + factors;
  }
  return out;
}

PolyElement ring_traits<PolyElement>::inverse(const PolyElement& a) {
  if (!is_unit(a)) throw DomainError("polynomial " + a.to_string() + " is not a unit");
  return PolyElement::constant(a.ring(), Rational(1) / a.constant_term());
}

}  // namespace brieskorn
