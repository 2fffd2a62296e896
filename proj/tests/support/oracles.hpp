#pragma once

// Reference computations for tests. Everything here is written directly on
// dense coefficient vectors and never calls the library's series code, so a
// bug there cannot hide behind the same bug here.

#include <random>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/series.hpp"

namespace oracle {

using brieskorn::Rational;
/// Coefficients a_0..a_n of a truncated univariate series.
using Dense = std::vector<Rational>;

inline Dense zeros(int n) { return Dense(static_cast<std::size_t>(n + 1), Rational(0)); }

inline Dense mul(const Dense& a, const Dense& b) {
  const int n = static_cast<int>(a.size()) - 1;
  Dense out = zeros(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return out;
}

inline Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Dense scale(const Dense& a, const Rational& q) {
  Dense out = a;
  for (auto& c : out) c *= q;
  return out;
}

/// 1/a by solving a * b = 1 coefficient by coefficient.
inline Dense reciprocal(const Dense& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Dense b = zeros(n);
  b[0] = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc / a[0];
  }
  return b;
}

inline Dense power(const Dense& a, int e) {
  Dense out = zeros(static_cast<int>(a.size()) - 1);
  out[0] = 1;
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

/// g(f(x)) by summing g_k f^k.
inline Dense compose(const Dense& g, const Dense& f) {
  const int n = static_cast<int>(f.size()) - 1;
  Dense out = zeros(n);
  Dense fk = zeros(n);
  fk[0] = 1;
  for (int k = 0; k <= n && k < static_cast<int>(g.size()); ++k) {
    out = add(out, scale(fk, g[static_cast<std::size_t>(k)]));
    fk = mul(fk, f);
  }
  return out;
}

/// Compositional inverse by Lagrange inversion: [y^n] f^{-1} = (1/n) [x^{n-1}] (x / f(x))^n.
inline Dense lagrange_inverse(const Dense& f) {
  const int n = static_cast<int>(f.size()) - 1;
  // x / f(x) = 1 / (f(x) / x)
  Dense q = zeros(n);
  for (int k = 1; k <= n; ++k) q[static_cast<std::size_t>(k - 1)] = f[static_cast<std::size_t>(k)];
  Dense phi = reciprocal(q);
  Dense out = zeros(n);
  for (int m = 1; m <= n; ++m) out[static_cast<std::size_t>(m)] = power(phi, m)[static_cast<std::size_t>(m - 1)] / m;
  return out;
}

inline Dense shift_up(const Dense& a) {  // x * a
  Dense out = zeros(static_cast<int>(a.size()) - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

/// h^A = g~ o g1^{-1}, with g1 = (x + gamma h)/(1 + alpha x + beta h), g~ = h/(same).
inline Dense act(const Rational& alpha, const Rational& beta, const Rational& gamma, const Dense& h) {
  const int n = static_cast<int>(h.size()) - 1;
  Dense x = zeros(n);
  if (n >= 1) x[1] = 1;
  Dense denom = zeros(n);
  denom[0] = 1;
  denom = add(add(denom, scale(x, alpha)), scale(h, beta));
  Dense u = reciprocal(denom);
  Dense g1 = mul(u, add(x, scale(h, gamma)));
  Dense gt = mul(u, h);
  return compose(gt, lagrange_inverse(g1));
}

inline Dense from_series(const brieskorn::Series& s) {
  Dense out = zeros(s.degree_bound());
  for (int k = 0; k <= s.degree_bound(); ++k) out[static_cast<std::size_t>(k)] = s.coefficient(brieskorn::exponents({k}));
  return out;
}

inline brieskorn::Series to_series(const Dense& a) {
  brieskorn::Series out(1, static_cast<int>(a.size()) - 1);
  for (std::size_t k = 0; k < a.size(); ++k) out.add_term(brieskorn::exponents({static_cast<int>(k)}), a[k]);
  return out;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Brute-force product of two multivariate series given as term maps.
inline brieskorn::Series brute_force_product(const brieskorn::Series& a, const brieskorn::Series& b) {
  brieskorn::Series out(a.nvars(), a.degree_bound());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(brieskorn::add_exponents(ea, eb), Rational(ca * cb));
  return out;
}

inline Rational small_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  return brieskorn::make_rational(num(rng), den(rng));
}

/// Random series with about `terms` terms in nvars variables up to total degree n.
inline brieskorn::Series random_series(std::mt19937_64& rng, int nvars, int n, int terms) {
  brieskorn::Series out(nvars, n);
  std::uniform_int_distribution<int> var(0, nvars - 1), deg(0, n);
  for (int t = 0; t < terms; ++t) {
    brieskorn::Exponents e{};
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++e[static_cast<std::size_t>(var(rng))];
    out.add_term(e, small_rational(rng));
  }
  return out;
}

}  // namespace oracle
