#include "brieskorn/canonical.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

int auto_level(const Frame& frame, const HVector& e) {
  std::vector<Rational> tilde = frame.to_tilde(std::span<const Rational>(e.at_origin()));
  for (std::size_t j = 0; j < tilde.size(); ++j)
    if (tilde[j] != 0) return static_cast<int>(j);
  throw DomainError("canonical_element: target vector is zero");
}

void record(MembershipWitness& witness, int j, int k, const Series& c) {
  auto& slot = witness.coeffs[static_cast<std::size_t>(j)];
  auto it = slot.find(k);
  if (it == slot.end()) {
    slot.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) slot.erase(it);
}

}  // namespace

CanonicalSolution canonical_element(const Lattice& lat, const Frame& frame, const HVector& e, std::optional<int> p_opt,
                                    const CanonicalOptions& options) {
  const GMSystem& sys = lat.system();
  if (frame.dim() != sys.dim()) throw StructuralError("canonical_element: frame size does not match the system");
  if (e.dim() != sys.dim() || e.nvars() != sys.nvars() || e.degree_bound() != sys.degree_bound())
    throw StructuralError("canonical_element: target vector shape does not match the system");
  for (int i = 0; i < e.dim(); ++i)
    if (e[i] != sys.constant_series(e[i].constant_term()))
      throw DomainError("canonical_element: target must have constant coefficients");
  const int p = p_opt.value_or(auto_level(frame, e));
  const int bound = options.bound.value_or(sys.weight_bound());
  if (p < 0 || p > bound) throw StructuralError("canonical_element: level p outside 0..bound");
  for (int j = 0; j < lat.rank(); ++j)
    if (lat.generator(j).valid_through() < bound) throw PrecisionError("canonical_element: generator not known through bound");

  CanonicalSolution sol{GMElement(sys.shape(), bound), {}, MembershipWitness{}, e, p, bound};
  sol.witness.coeffs.resize(static_cast<std::size_t>(lat.rank()));
  const int n = sys.nvars(), deg = sys.degree_bound();

  auto absorb = [&](int q, const std::vector<int>& avail, const SplitResult& parts) {
    for (std::size_t c = 0; c < avail.size(); ++c) {
      const Series& coef = parts.f_coefficients[c];
      if (coef.is_zero()) continue;
      const int j = avail[c];
      const int k = q - lat.lead_weight(j);
      record(sol.witness, j, k, coef);
      sol.w += lat.generator(j).shifted(k).scaled(coef).restrict_to(bound);
    }
  };

  // Lead weight: F_0 representative of e modulo U^1.
  {
    std::vector<int> avail = lat.leading_by(p);
    SplitResult parts;
    try {
      parts = split(e, lat.hodge_filtration(p), u_subspace(frame, p, 1, n, deg), options.order);
    } catch (const DomainError& err) {
      throw DomainError("canonical_element: no F_0 representative of the target at weight " + std::to_string(p) +
                        " (" + err.what() + ")");
    }
    absorb(p, avail, parts);
  }
  for (int q = p + 1; q <= bound; ++q) {
    HVector comp = sol.w.component(q);
    if (comp.is_zero()) continue;
    std::vector<int> avail = lat.leading_by(q);
    SplitResult parts = split(comp, lat.hodge_filtration(q), u_subspace(frame, q, 1, n, deg), options.order);
    for (auto& c : parts.f_coefficients) c = -c;
    absorb(q, avail, parts);
  }
  GMElement diff = sol.w - sys.element(p, e).restrict_to(bound);
  for (const auto& [q, v] : diff.terms()) sol.u_terms.emplace(q, v);
  return sol;
}

std::vector<CanonicalSolution> canonical_generators(const Lattice& lat, const Frame& frame,
                                                    const CanonicalOptions& options) {
  std::vector<CanonicalSolution> out;
  const GMSystem& sys = lat.system();
  for (int j = 0; j <= sys.r(); ++j) {
    HVector e = HVector::constant(frame.tilde_basis(j), sys.nvars(), sys.degree_bound());
    out.push_back(canonical_element(lat, frame, e, j, options));
  }
  return out;
}

ResidualCheck check_residual_law(const CanonicalSolution& sol, const Frame& frame) {
  const GMShape& shape = sol.w.shape();
  GMElement target = GMElement::single(shape, sol.lead_weight, sol.target).restrict_to(sol.bound);
  GMElement diff = sol.w - target;
  ResidualCheck out;
  for (const auto& [q, v] : diff.terms()) {
    if (q < sol.lead_weight) {
      out.holds = false;
      out.failing_weight = q;
      out.detail = "nonzero component below the lead weight";
      return out;
    }
    HVector tilde = frame.to_tilde(v);
    for (int j = 0; j <= std::min(q, frame.r()); ++j)
      if (!tilde[j].is_zero()) {
        out.holds = false;
        out.failing_weight = q;
        out.detail = "e~_" + std::to_string(j) + "-coordinate " + tilde[j].to_string() + " at weight " +
                     std::to_string(q) + " is outside U^1";
        return out;
      }
  }
  return out;
}

GenerationCheck check_generation(const Lattice& lat, const std::vector<CanonicalSolution>& canonical, int bound) {
  std::vector<GMElement> gens;
  for (const auto& c : canonical) gens.push_back(c.w);
  Lattice can(lat.system(), std::move(gens));
  GenerationCheck out;
  for (int j = 0; j < lat.rank(); ++j) {
    ReduceResult res = can.reduce(lat.generator(j).restrict_to(bound), bound);
    if (!res.member) {
      out.generates = false;
      out.failing_generator = j;
      return out;
    }
    out.witnesses.push_back(std::move(res.witness));
  }
  return out;
}

RationalMatrix InvariantTuple::jacobian_at_origin() const {
  const std::size_t r = g.size();
  RationalMatrix jac(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      Exponents e{};
      e[i] = 1;
      jac(j, i) = g[j].coefficient(e);
    }
  return jac;
}

bool InvariantTuple::is_coordinate_system() const {
  for (const auto& f : g)
    if (f.constant_term() != 0) return false;
  return jacobian_at_origin().rank() == g.size();
}

InvariantTuple extract_invariants(const CanonicalSolution& sol, const Frame& frame) {
  const int r = frame.r();
  if (r < 2) throw StructuralError("extract_invariants needs r >= 2");
  if (sol.w.valid_through() < r - 1)
    throw PrecisionError("extract_invariants: solution known through weight " + std::to_string(sol.w.valid_through()) +
                         ", need " + std::to_string(r - 1));
  InvariantTuple out;
  for (int j = 1; j <= r; ++j) out.g.push_back(frame.to_tilde(sol.w.component(j - 1))[j]);
  out.g_tilde = frame.to_tilde(sol.w.component(0))[2];
  return out;
}

PeriodSupport period_support(const Lattice& lat, const Frame& frame, const std::vector<std::vector<Rational>>& points,
                             const CanonicalOptions& options) {
  const GMSystem& sys = lat.system();
  HVector e0 = HVector::constant(frame.tilde_basis(0), sys.nvars(), sys.degree_bound());
  CanonicalSolution sol = canonical_element(lat, frame, e0, 0, options);
  PeriodSupport out;
  for (const auto& [w, v] : sol.w.terms())
    for (int i = 0; i < v.dim(); ++i)
      if (!v[i].is_zero()) out.support.emplace(w, i);
  out.within_reference_span = true;
  for (const auto& [w, i] : out.support) {
    bool inside = (i == 0) ? w == 1 : (w >= 1 && w <= i);
    if (!inside) {
      out.within_reference_span = false;
      out.outside_reference_span.emplace_back(w, i);
    }
  }
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != sys.nvars())
      throw StructuralError("period_support: sample point has " + std::to_string(pt.size()) + " coordinates, need " +
                            std::to_string(sys.nvars()));
    PeriodSample s{pt, {}};
    for (const auto& [w, i] : out.support) s.image.push_back(evaluate(sol.w.component(w)[i], pt));
    out.samples.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < out.samples.size(); ++a)
    for (std::size_t b = a + 1; b < out.samples.size(); ++b)
      if (out.samples[a].point != out.samples[b].point && out.samples[a].image == out.samples[b].image)
        out.injective_on_samples = false;
  return out;
}

}  // namespace brieskorn
