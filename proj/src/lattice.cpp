#include "brieskorn/lattice.hpp"

#include <functional>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

Series derivative_power(Series f, int k) {
  for (int i = 0; i < k; ++i) f = partial_derivative(f, 1);
  return f;
}

Rational factorial(int n) {
  Rational out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Calls fn(nu) for every nu = (nu_2..nu_r) with |nu| <= max_size and
// sum (i-1) nu_i <= max_weight. nu is indexed by i (entries 0 and 1 unused).
void for_each_multi_index(int r, int max_size, int max_weight, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> nu(static_cast<std::size_t>(r + 1), 0);
  std::function<void(int, int, int)> rec = [&](int i, int size, int weight) {
    if (i > r) {
      fn(nu);
      return;
    }
    for (int k = 0; size + k <= max_size && weight + k * (i - 1) <= max_weight; ++k) {
      nu[static_cast<std::size_t>(i)] = k;
      rec(i + 1, size + k, weight + k * (i - 1));
    }
    nu[static_cast<std::size_t>(i)] = 0;
  };
  rec(2, 0, 0);
}

// Adds sum_nu sum_i factor(nu) * h_i^(||nu|| + j)(s_1) s^nu/nu! at weight
// ||nu|| - |nu| + weight_offset to `out`.
void add_relative_terms(const GMSystem& sys, const RelativeFamilySpec& spec, int j, int weight_offset,
                        const std::function<Rational(const std::vector<int>&)>& factor, GMElement& out) {
  const int r = sys.r();
  const int K = sys.weight_bound();
  if (K - weight_offset < 0) return;
  for_each_multi_index(r, sys.degree_bound(), K - weight_offset, [&](const std::vector<int>& nu) {
    int norm = 0, size = 0;
    Rational nu_fact = 1;
    for (int i = 2; i <= r; ++i) {
      norm += i * nu[static_cast<std::size_t>(i)];
      size += nu[static_cast<std::size_t>(i)];
      nu_fact *= factorial(nu[static_cast<std::size_t>(i)]);
    }
    Rational scale = factor(nu);
    if (scale == 0) return;
    scale /= nu_fact;
    HVector v = sys.zero_vector();
    bool any = false;
    for (int i = 2; i <= r; ++i) {
      Series hd = derivative_power(spec.h[static_cast<std::size_t>(i - 2)], norm + j);
      for (const auto& [e, c] : hd.terms()) {
        Exponents m{};
        m[0] = e[0];
        for (int k = 2; k <= r; ++k) m[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(nu[static_cast<std::size_t>(k)]);
        if (total_degree(m) > sys.degree_bound()) continue;
        v[i].add_term(m, Rational(c * scale));
        any = true;
      }
    }
    if (any) out.add(norm - size + weight_offset, v);
  });
}

void require_relative_system(const GMSystem& sys) {
  if (!sys.has_zero_nilpotent()) throw DomainError("relative family requires N = 0");
  if (sys.nvars() != sys.r()) throw StructuralError("relative family requires nvars = r");
  if (sys.r() < 2) throw StructuralError("relative family requires r >= 2");
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Generic: return "generic";
    case FamilyKind::Special: return "special";
    case FamilyKind::Nilpotent: return "nilpotent";
    case FamilyKind::Relative: return "relative";
  }
  return "unknown";
}

GMElement MembershipWitness::expand(const Lattice& lattice) const {
  GMElement out = lattice.system().zero();
  if (coeffs.size() != static_cast<std::size_t>(lattice.rank()))
    throw StructuralError("witness has " + std::to_string(coeffs.size()) + " entries for a rank " +
                          std::to_string(lattice.rank()) + " lattice");
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (const auto& [k, c] : coeffs[j]) out += lattice.generator(static_cast<int>(j)).shifted(k).scaled(c);
  return out;
}

std::string MembershipWitness::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    out += "v" + std::to_string(j) + " : ";
    if (coeffs[j].empty()) out += "0";
    bool first = true;
    for (const auto& [k, c] : coeffs[j]) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.to_string() + ")";
      if (k != 0) out += "*dt^-" + std::to_string(k);
    }
    out += "\n";
  }
  return out;
}

Lattice::Lattice(GMSystem system, std::vector<GMElement> generators)
    : system_(std::move(system)), generators_(std::move(generators)) {
  if (generators_.empty()) throw StructuralError("lattice needs at least one generator");
  std::vector<std::vector<Rational>> at_zero;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    const GMElement& g = generators_[j];
    if (!(g.shape() == system_.shape())) throw StructuralError("generator " + std::to_string(j) + " has the wrong shape");
    auto low = g.lowest_weight();
    if (!low) throw DomainError("generator " + std::to_string(j) + " is zero");
    if (*low < 0) throw DomainError("generator " + std::to_string(j) + " has a negative-weight component");
    lead_weights_.push_back(*low);
    leads_.push_back(g.component(*low));
    at_zero.push_back(leads_.back().at_origin());
  }
  if (rank_of_columns(at_zero, static_cast<std::size_t>(system_.dim())) != generators_.size())
    throw DomainError("leading vectors are dependent at s = 0");
}

std::vector<int> Lattice::leading_by(int w) const {
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j)
    if (lead_weights_[static_cast<std::size_t>(j)] <= w) out.push_back(j);
  return out;
}

std::vector<HVector> Lattice::hodge_filtration(int w) const {
  std::vector<HVector> out;
  for (int j : leading_by(w)) out.push_back(leads_[static_cast<std::size_t>(j)]);
  return out;
}

ReduceResult Lattice::reduce(const GMElement& x, int bound, PivotOrder order) const {
  if (!(x.shape() == system_.shape())) throw StructuralError("reduce: element shape does not match the lattice");
  if (bound > x.valid_through())
    throw PrecisionError("reduce: element known through weight " + std::to_string(x.valid_through()) +
                         ", bound " + std::to_string(bound) + " requested");
  for (std::size_t j = 0; j < generators_.size(); ++j)
    if (generators_[j].valid_through() < bound)
      throw PrecisionError("reduce: generator " + std::to_string(j) + " not known through the bound");

  ReduceResult result{false, MembershipWitness{}, x.restrict_to(bound), std::nullopt};
  result.witness.coeffs.resize(generators_.size());
  GMElement& rest = result.residual;

  auto low = rest.lowest_weight();
  if (low && *low < 0) {
    result.residual_weight = *low;
    return result;
  }
  for (int w = low.value_or(bound + 1); w <= bound; ++w) {
    HVector comp = rest.component(w);
    if (comp.is_zero()) continue;
    std::vector<int> avail = leading_by(w);
    if (avail.empty()) {
      result.residual_weight = w;
      return result;
    }
    std::vector<HVector> cols;
    for (int j : avail) cols.push_back(leads_[static_cast<std::size_t>(j)]);
    UnitPivotSolution sol = solve_unit_pivot(cols, comp, order);
    for (std::size_t c = 0; c < avail.size(); ++c) {
      const Series& coef = sol.coefficients[c];
      if (coef.is_zero()) continue;
      const int j = avail[c];
      const int k = w - lead_weights_[static_cast<std::size_t>(j)];
      auto& slot = result.witness.coeffs[static_cast<std::size_t>(j)];
      auto it = slot.find(k);
      if (it == slot.end()) slot.emplace(k, coef);
      else {
        it->second += coef;
        if (it->second.is_zero()) slot.erase(it);
      }
      rest -= generators_[static_cast<std::size_t>(j)].shifted(k).scaled(coef).restrict_to(bound);
    }
    if (!sol.exact()) {
      result.residual_weight = w;
      return result;
    }
  }
  result.member = true;
  return result;
}

Lattice Lattice::with_series_bound(int degree) const {
  GMSystem sys(system_.r(), system_.nilpotent(), system_.weight_bound(), system_.nvars(), degree);
  std::vector<GMElement> gens;
  for (const auto& g : generators_) gens.push_back(g.truncate_series(degree));
  Lattice out(std::move(sys), std::move(gens));
  out.kind_ = kind_;
  out.special_ = special_;
  out.relative_ = relative_;
  return out;
}

Lattice Lattice::at_origin() const {
  std::vector<GMElement> gens;
  for (const auto& g : generators_) gens.push_back(g.at_origin());
  Lattice out(system_, std::move(gens));
  out.kind_ = kind_;
  out.special_ = special_;
  out.relative_ = relative_;
  return out;
}

Lattice Lattice::with_generator(int j, GMElement g) const {
  std::vector<GMElement> gens = generators_;
  gens.at(static_cast<std::size_t>(j)) = std::move(g);
  Lattice out(system_, std::move(gens));
  out.kind_ = kind_;
  out.special_ = special_;
  out.relative_ = relative_;
  return out;
}

void validate_deformation_function(const Series& h) {
  if (h.nvars() != 1) throw StructuralError("deformation function must be univariate in s1");
  if (h.coefficient(exponents({0})) != 0 || h.coefficient(exponents({1})) != 0)
    throw DomainError("deformation function needs h(0) = h'(0) = 0, got " + h.to_string());
}

Lattice special_deformation(const GMSystem& sys, const Series& h) {
  if (!sys.has_zero_nilpotent()) throw DomainError("special deformation requires N = 0");
  if (sys.nvars() != sys.r()) throw StructuralError("special deformation requires nvars = r");
  if (sys.r() < 2) throw StructuralError("special deformation requires r >= 2");
  validate_deformation_function(h);
  const int r = sys.r();
  const int n = sys.degree_bound();
  Series hs = embed_univariate(h, r, 1, n);
  Series hp = embed_univariate(partial_derivative(h, 1), r, 1, n);

  std::vector<GMElement> gens;
  GMElement v0 = sys.zero();
  HVector lead = sys.basis(0);
  lead[1] = sys.s(1);
  lead[2] = hs;
  v0.add(0, lead);
  for (int j = 2; j <= r; ++j) {
    HVector v = sys.zero_vector();
    v[j] = sys.s(j);
    v0.add(j - 1, v);
  }
  gens.push_back(v0);
  HVector l1 = sys.basis(1);
  l1[2] = hp;
  gens.push_back(sys.element(1, l1));
  for (int j = 2; j <= r; ++j) gens.push_back(sys.basis_element(j, j));

  Lattice out(sys, std::move(gens));
  out.kind_ = FamilyKind::Special;
  out.special_ = SpecialDeformation{h};
  return out;
}

Lattice nilpotent_family(const GMSystem& sys) {
  if (!sys.has_shift_nilpotent()) throw DomainError("nilpotent family requires the shift matrix");
  if (sys.nvars() != sys.r()) throw StructuralError("nilpotent family requires nvars = r");
  std::vector<GMElement> gens;
  for (int j = 0; j <= sys.r(); ++j) gens.push_back(exp_nilpotent_apply(sys, sys.basis_element(j, j)));
  Lattice out(sys, std::move(gens));
  out.kind_ = FamilyKind::Nilpotent;
  return out;
}

void validate_relative_spec(const GMSystem& sys, const RelativeFamilySpec& spec) {
  if (static_cast<int>(spec.h.size()) != sys.r() - 1)
    throw StructuralError("relative family needs h_2..h_r (" + std::to_string(sys.r() - 1) + " functions), got " +
                          std::to_string(spec.h.size()));
  for (int i = 2; i <= sys.r(); ++i) {
    const Series& h = spec.h[static_cast<std::size_t>(i - 2)];
    if (h.nvars() != 1) throw StructuralError("h_" + std::to_string(i) + " must be univariate in s1");
    if (h.order() != i || h.coefficient(exponents({i})) == 0)
      throw DomainError("h_" + std::to_string(i) + " must have order exactly " + std::to_string(i) + ", got " +
                        h.to_string());
  }
}

GMElement relative_generator(const GMSystem& sys, const RelativeFamilySpec& spec, int j) {
  require_relative_system(sys);
  validate_relative_spec(sys, spec);
  if (j < 0) throw StructuralError("relative_generator: negative index");
  GMElement out = sys.zero();
  if (j == 0) {
    HVector v = sys.basis(0);
    v[1] = sys.s(1);
    out.add(0, v);
  } else if (j == 1) {
    out.add(1, sys.basis(1));
  }
  add_relative_terms(sys, spec, j, j, [](const std::vector<int>&) { return Rational(1); }, out);
  return out;
}

GMElement relative_primitive(const GMSystem& sys, const RelativeFamilySpec& spec) {
  return relative_generator(sys, spec, 0);
}

GMElement relative_t_defect(const GMSystem& sys, const RelativeFamilySpec& spec) {
  require_relative_system(sys);
  validate_relative_spec(sys, spec);
  GMElement out = sys.zero();
  const int r = sys.r();
  add_relative_terms(sys, spec, 0, 1,
                     [r](const std::vector<int>& nu) {
                       int diff = 0;
                       for (int i = 2; i <= r; ++i) diff += (i - 1) * nu[static_cast<std::size_t>(i)];
                       return Rational(diff);
                     },
                     out);
  return out;
}

Lattice relative_family(const GMSystem& sys, const RelativeFamilySpec& spec) {
  require_relative_system(sys);
  validate_relative_spec(sys, spec);
  std::vector<GMElement> gens;
  for (int j = 0; j <= sys.r(); ++j) gens.push_back(relative_generator(sys, spec, j));
  Lattice out(sys, std::move(gens));
  out.kind_ = FamilyKind::Relative;
  out.relative_ = spec;
  return out;
}

}  // namespace brieskorn
