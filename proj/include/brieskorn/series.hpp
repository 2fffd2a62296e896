#pragma once

// Truncated multivariate power series in s1..s_n over an exact coefficient
// ring, truncated by total degree.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "brieskorn/errors.hpp"
#include "brieskorn/literal.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/ring.hpp"

namespace brieskorn {

inline constexpr int kMaxSeriesVars = 8;
inline constexpr int kMaxSeriesDegree = 200;

using Exponents = std::array<std::uint8_t, kMaxSeriesVars>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int i = 0; i < kMaxSeriesVars; ++i) out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return out;
}

// Exponent vector of s_1^a1 ... s_k^ak.
inline Exponents exponents(std::initializer_list<int> powers) {
  Exponents e{};
  int i = 0;
  for (int p : powers) e.at(i++) = static_cast<std::uint8_t>(p);
  return e;
}

/// Size threshold (|a| * |b| term pairs) above which multiplication uses
/// the OpenMP gather kernel.
inline constexpr std::size_t kParallelMulThreshold = 4096;

template <CoefficientRing C>
class MultiSeries {
 public:
  using Coefficient = C;
  using TermMap = std::map<Exponents, C>;

  MultiSeries() : MultiSeries(1, 0) {}
  MultiSeries(int nvars, int degree_bound) : nvars_(nvars), degree_bound_(degree_bound) {
    if (nvars < 1 || nvars > kMaxSeriesVars)
      throw StructuralError("series variable count must lie in [1, " + std::to_string(kMaxSeriesVars) + "]");
    if (degree_bound < 0 || degree_bound > kMaxSeriesDegree)
      throw StructuralError("series degree bound out of range");
  }

  static MultiSeries constant(int nvars, int degree_bound, const C& c) {
    MultiSeries out(nvars, degree_bound);
    out.add_term(Exponents{}, c);
    return out;
  }
  static MultiSeries one(int nvars, int degree_bound) {
    return constant(nvars, degree_bound, ring_traits<C>::one());
  }
  /// The coordinate s_i, 1-based.
  static MultiSeries variable(int nvars, int degree_bound, int i) {
    MultiSeries out(nvars, degree_bound);
    out.check_index(i);
    Exponents e{};
    e[i - 1] = 1;
    out.add_term(e, ring_traits<C>::one());
    return out;
  }
  static MultiSeries monomial(int nvars, int degree_bound, const Exponents& e, const C& c) {
    MultiSeries out(nvars, degree_bound);
    out.add_term(e, c);
    return out;
  }
  /// Univariate series from coefficients c_0, c_1, ... in s_1.
  static MultiSeries from_coefficients(int nvars, int degree_bound, std::span<const C> coeffs) {
    MultiSeries out(nvars, degree_bound);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Exponents e{};
      if (k > static_cast<std::size_t>(kMaxSeriesDegree)) break;
      e[0] = static_cast<std::uint8_t>(k);
      out.add_term(e, coeffs[k]);
    }
    return out;
  }

  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_bound_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_traits<C>::zero() : it->second;
  }
  C constant_term() const { return coefficient(Exponents{}); }

  /// Lowest total degree of a stored term; degree_bound()+1 for the zero series.
  int order() const {
    int best = degree_bound_ + 1;
    for (const auto& [e, c] : terms_) best = std::min(best, total_degree(e));
    return best;
  }

  /// Adds c * s^e, dropping it when its degree exceeds the bound.
  void add_term(const Exponents& e, const C& c) {
    for (int i = nvars_; i < kMaxSeriesVars; ++i)
      if (e[i] != 0) throw StructuralError("exponent on a variable beyond nvars");
    if (total_degree(e) > degree_bound_ || ring_traits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = C(it->second + c);
      if (ring_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Same terms, recorded bound lowered (or raised) to `degree`.
  MultiSeries truncate(int degree) const {
    MultiSeries out(nvars_, degree);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= degree) out.terms_.emplace(e, c);
    return out;
  }

  MultiSeries homogeneous_part(int degree) const {
    MultiSeries out(nvars_, degree_bound_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == degree) out.terms_.emplace(e, c);
    return out;
  }

  MultiSeries operator-() const {
    MultiSeries out = *this;
    for (auto& [e, c] : out.terms_) c = C(-c);
    return out;
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, C(-c));
    return out;
  }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
#ifdef _OPENMP
    if (!omp_in_parallel() && a.terms_.size() * b.terms_.size() >= kParallelMulThreshold)
      return multiply_parallel(a, b);
#endif
    return multiply_serial(a, b);
  }
  MultiSeries& operator+=(const MultiSeries& b) { return *this = *this + b; }
  MultiSeries& operator-=(const MultiSeries& b) { return *this = *this - b; }
  MultiSeries& operator*=(const MultiSeries& b) { return *this = *this * b; }

  MultiSeries scaled(const C& factor) const {
    MultiSeries out(nvars_, degree_bound_);
    if (ring_traits<C>::is_zero(factor)) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, C(c * factor));
    return out;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.nvars_ == b.nvars_ && a.degree_bound_ == b.degree_bound_ && a.terms_ == b.terms_;
  }

  /// Reference kernel: direct sparse convolution.
  static MultiSeries multiply_serial(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries out(a.nvars_, a.degree_bound_);
    std::vector<std::pair<int, const typename TermMap::value_type*>> rhs;
    rhs.reserve(b.terms_.size());
    for (const auto& kv : b.terms_) rhs.emplace_back(total_degree(kv.first), &kv);
    std::stable_sort(rhs.begin(), rhs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [ea, ca] : a.terms_) {
      int room = a.degree_bound_ - total_degree(ea);
      for (const auto& [db, term] : rhs) {
        if (db > room) break;
        Exponents e = add_exponents(ea, term->first);
        C product(ca * term->second);
        auto [it, inserted] = out.terms_.try_emplace(e, product);
        if (!inserted) it->second = C(it->second + product);
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return ring_traits<C>::is_zero(kv.second); });
    return out;
  }

  /// OpenMP kernel: enumerates the output support, then gathers every output
  /// coefficient independently. Falls back to the serial loop without OpenMP.
  static MultiSeries multiply_parallel(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    std::set<Exponents> support;
    std::vector<const typename TermMap::value_type*> lhs;
    lhs.reserve(a.terms_.size());
    for (const auto& kv : a.terms_) {
      lhs.push_back(&kv);
      int room = a.degree_bound_ - total_degree(kv.first);
      for (const auto& [eb, cb] : b.terms_)
        if (total_degree(eb) <= room) support.insert(add_exponents(kv.first, eb));
    }
    std::vector<Exponents> targets(support.begin(), support.end());
    std::vector<C> values(targets.size(), ring_traits<C>::zero());
    const auto n = static_cast<std::ptrdiff_t>(targets.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const Exponents& m = targets[static_cast<std::size_t>(i)];
      C acc = ring_traits<C>::zero();
      for (const auto* term : lhs) {
        Exponents rest{};
        bool divides = true;
        for (int v = 0; v < kMaxSeriesVars && divides; ++v) {
          if (term->first[v] > m[v]) divides = false;
          else rest[v] = static_cast<std::uint8_t>(m[v] - term->first[v]);
        }
        if (!divides) continue;
        auto it = b.terms_.find(rest);
        if (it != b.terms_.end()) acc = C(acc + C(term->second * it->second));
      }
      values[static_cast<std::size_t>(i)] = std::move(acc);
    }
    MultiSeries out(a.nvars_, a.degree_bound_);
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (!ring_traits<C>::is_zero(values[i])) out.terms_.emplace_hint(out.terms_.end(), targets[i], std::move(values[i]));
    return out;
  }

  /// Text form: terms `c*s1^a1*...*sn^an` joined by `+`/`-`, ascending total
  /// degree; "0" for the zero series.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const typename TermMap::value_type*> order;
    for (const auto& kv : terms_) order.push_back(&kv);
    std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
      int dx = total_degree(x->first), dy = total_degree(y->first);
      if (dx != dy) return dx < dy;
      return x->first > y->first;
    });
    std::string out;
    bool first = true;
    for (const auto* kv : order) {
      std::string factors;
      for (int v = 0; v < nvars_; ++v) {
        int p = kv->first[v];
        if (p == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += "s" + std::to_string(v + 1);
        if (p > 1) factors += "^" + std::to_string(p);
      }
      out += format_term(kv->second, factors, first);
      first = false;
    }
    return out;
  }

  void check_index(int i) const {
    if (i < 1 || i > nvars_)
      throw StructuralError("variable index " + std::to_string(i) + " outside 1.." + std::to_string(nvars_));
  }

  void check_compatible(const MultiSeries& b) const {
    if (nvars_ != b.nvars_ || degree_bound_ != b.degree_bound_)
      throw StructuralError("series shape mismatch: (" + std::to_string(nvars_) + "," + std::to_string(degree_bound_) +
                            ") vs (" + std::to_string(b.nvars_) + "," + std::to_string(b.degree_bound_) + ")");
  }

 private:
  static std::string format_term(const C& c, const std::string& factors, bool first);

  int nvars_;
  int degree_bound_;
  TermMap terms_;
};

template <CoefficientRing C>
std::string MultiSeries<C>::format_term(const C& c, const std::string& factors, bool first) {
  if constexpr (std::is_same_v<C, Rational>) {
    std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Rational magnitude = abs(c);
    if (factors.empty()) return sign + brieskorn::to_string(magnitude);
    if (magnitude == 1) return sign + factors;
    return sign + brieskorn::to_string(magnitude) + "*" + factors;
  } else {
    std::string text = ring_traits<C>::to_string(c);
    if (ring_traits<C>::needs_grouping(c)) text = "(" + text + ")";
    std::string out = first ? "" : " + ";
    if (factors.empty()) return out + text;
    return out + text + "*" + factors;
  }
}

using Series = MultiSeries<Rational>;

/// Parses the text form over s1..s_nvars (`s` is accepted for s1 when
/// nvars == 1). Terms above the degree bound are truncated away.
Series parse_series(std::string_view text, int nvars, int degree_bound);

/// g with f*g = 1 mod degree N. Requires a unit constant term.
template <CoefficientRing C>
MultiSeries<C> unit_inverse(const MultiSeries<C>& f) {
  C c0 = f.constant_term();
  if (!ring_traits<C>::is_unit(c0)) throw DomainError("unit_inverse: constant term is not a unit");
  C inv = ring_traits<C>::inverse(c0);
  const int n = f.degree_bound();
  std::vector<MultiSeries<C>> fparts, gparts;
  for (int d = 0; d <= n; ++d) fparts.push_back(f.homogeneous_part(d));
  gparts.push_back(MultiSeries<C>::constant(f.nvars(), n, inv));
  for (int d = 1; d <= n; ++d) {
    MultiSeries<C> acc(f.nvars(), n);
    for (int i = 1; i <= d; ++i) {
      if (fparts[i].is_zero() || gparts[d - i].is_zero()) continue;
      acc += fparts[i] * gparts[d - i];
    }
    gparts.push_back((-acc).scaled(inv));
  }
  MultiSeries<C> g(f.nvars(), n);
  for (const auto& part : gparts) g += part;
  return g;
}

/// Termwise derivative in s_i (1-based). The recorded bound stays N, so
/// callers comparing derivatives should only trust degrees < N.
template <CoefficientRing C>
MultiSeries<C> partial_derivative(const MultiSeries<C>& f, int i) {
  f.check_index(i);
  MultiSeries<C> out(f.nvars(), f.degree_bound());
  for (const auto& [e, c] : f.terms()) {
    if (e[i - 1] == 0) continue;
    Exponents d = e;
    C factor = ring_traits<C>::from_rational(Rational(d[i - 1]));
    --d[i - 1];
    out.add_term(d, C(c * factor));
  }
  return out;
}

/// g(f) for univariate g, by Horner accumulation. f must have zero constant
/// term; the result has f's shape, so g's bound must be at least f's.
template <CoefficientRing C>
MultiSeries<C> compose_univariate(const MultiSeries<C>& g, const MultiSeries<C>& f) {
  if (g.nvars() != 1) throw StructuralError("compose_univariate: outer series must be univariate");
  if (g.degree_bound() < f.degree_bound()) throw StructuralError("compose_univariate: outer series truncated too early");
  if (!ring_traits<C>::is_zero(f.constant_term()))
    throw DomainError("compose_univariate: inner series has nonzero constant term");
  const int n = f.degree_bound();
  MultiSeries<C> acc(f.nvars(), n);
  for (int k = n; k >= 0; --k) {
    acc = acc * f;
    acc.add_term(Exponents{}, g.coefficient(exponents({k})));
  }
  return acc;
}

/// Compositional inverse of a univariate f with f(0) = 0 and a unit linear
/// coefficient a1. The monic part F = f/a1 is inverted by the increasing
/// induction b_k = -[x^k] sum_{i<k} b_i F^i, then rescaled: g(y) = G(y/a1).
template <CoefficientRing C>
MultiSeries<C> compositional_inverse(const MultiSeries<C>& f) {
  if (f.nvars() != 1) throw StructuralError("compositional_inverse: series must be univariate");
  if (!ring_traits<C>::is_zero(f.constant_term()))
    throw DomainError("compositional_inverse: nonzero constant term");
  C a1 = f.coefficient(exponents({1}));
  if (!ring_traits<C>::is_unit(a1)) throw DomainError("compositional_inverse: linear coefficient is not a unit");
  const int n = f.degree_bound();
  C inv_a1 = ring_traits<C>::inverse(a1);
  MultiSeries<C> monic = f.scaled(inv_a1);

  std::vector<C> b(static_cast<std::size_t>(n + 1), ring_traits<C>::zero());
  std::vector<MultiSeries<C>> powers;  // powers[i] = F^i
  powers.push_back(MultiSeries<C>::one(1, n));
  if (n >= 1) {
    b[1] = ring_traits<C>::one();
    powers.push_back(monic);
  }
  for (int k = 2; k <= n; ++k) {
    C acc = ring_traits<C>::zero();
    for (int i = 1; i < k; ++i) acc = C(acc + C(b[i] * powers[i].coefficient(exponents({k}))));
    b[k] = C(-acc);
    powers.push_back(powers.back() * monic);
  }
  MultiSeries<C> g(1, n);
  C scale = ring_traits<C>::one();
  for (int k = 1; k <= n; ++k) {
    scale = C(scale * inv_a1);
    g.add_term(exponents({k}), C(b[k] * scale));
  }
  return g;
}

/// Rewrites a univariate series in s as a series in s_var of an nvars ring.
template <CoefficientRing C>
MultiSeries<C> embed_univariate(const MultiSeries<C>& h, int nvars, int var, int degree_bound) {
  if (h.nvars() != 1) throw StructuralError("embed_univariate: series must be univariate");
  MultiSeries<C> out(nvars, degree_bound);
  out.check_index(var);
  for (const auto& [e, c] : h.terms()) {
    Exponents m{};
    m[var - 1] = e[0];
    out.add_term(m, c);
  }
  return out;
}

/// Value at a rational point (the truncated series read as a polynomial).
Rational evaluate(const Series& f, std::span<const Rational> point);

extern template class MultiSeries<Rational>;

}  // namespace brieskorn
