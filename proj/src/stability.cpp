#include "brieskorn/stability.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

std::string vname(int j) { return "v" + std::to_string(j); }

StabilityCheck membership(const Lattice& lat, const GMElement& x, int bound, std::string name) {
  StabilityCheck c;
  c.kind = CheckKind::Membership;
  c.name = std::move(name);
  c.bound = bound;
  c.series_degree = lat.system().degree_bound();
  ReduceResult res = lat.reduce(x, bound);
  c.passed = res.member;
  if (res.member) {
    c.witness = std::move(res.witness);
  } else {
    c.residual = std::move(res.residual);
    c.residual_weight = res.residual_weight;
    c.detail = "not a member: residual at weight " + std::to_string(res.residual_weight.value_or(-1));
  }
  return c;
}

StabilityCheck closed_form(const GMElement& lhs, const GMElement& rhs, int bound, std::string name) {
  StabilityCheck c;
  c.kind = CheckKind::ClosedForm;
  c.name = std::move(name);
  c.bound = bound;
  c.series_degree = lhs.shape().degree_bound;
  c.passed = equal_through(lhs, rhs, bound);
  if (!c.passed) {
    GMElement diff = (lhs - rhs).restrict_to(bound);
    c.residual_weight = diff.lowest_weight();
    c.residual = std::move(diff);
    c.detail = "sides differ at weight " + std::to_string(c.residual_weight.value_or(-1));
  }
  return c;
}

GMElement gen_or_zero(const Lattice& lat, int j) {
  return j <= lat.system().r() ? lat.generator(j) : lat.system().zero();
}

void special_closed_forms(const Lattice& lat, const Lattice& low, int bound, std::vector<StabilityCheck>& out) {
  const GMSystem& sys = lat.system();
  const int r = sys.r();
  GMElement rhs = apply_dti(lat.generator(0));
  for (int j = 2; j <= r; ++j) rhs += lat.generator(j).scaled(sys.s(j).scaled(Rational(j - 1)));
  out.push_back(closed_form(apply_t(sys, lat.generator(0)), rhs, bound, "t*v0 = dt^-1*v0 + sum_j (j-1) s_j v_j"));
  for (int j = 1; j <= r; ++j)
    out.push_back(closed_form(apply_t(sys, lat.generator(j)), apply_dti(lat.generator(j)).scaled(Rational(j + 1)), bound,
                              "t*" + vname(j) + " = " + std::to_string(j + 1) + " dt^-1*" + vname(j)));

  const GMSystem& lsys = low.system();
  const Series& h = lat.special()->h;
  Series h2 = embed_univariate(partial_derivative(partial_derivative(h, 1), 1), r, 1, lsys.degree_bound());
  for (int i = 1; i <= r; ++i) {
    out.push_back(closed_form(apply_dti_dsi(lat.generator(0), i).truncate_series(lsys.degree_bound()), low.generator(i),
                              bound, "dt^-1*d_s" + std::to_string(i) + "*v0 = " + vname(i)));
    for (int j = 1; j <= r; ++j) {
      GMElement lhs = apply_dti_dsi(lat.generator(j), i).truncate_series(lsys.degree_bound());
      GMElement rhs2 = (i == 1 && j == 1) ? low.generator(2).scaled(h2) : lsys.zero();
      out.push_back(closed_form(lhs, rhs2, bound,
                                "dt^-1*d_s" + std::to_string(i) + "*" + vname(j) +
                                    ((i == 1 && j == 1) ? " = h''*v2" : " = 0")));
    }
  }
}

void nilpotent_closed_forms(const Lattice& lat, const Lattice& low, int bound, std::vector<StabilityCheck>& out) {
  const GMSystem& sys = lat.system();
  const GMSystem& lsys = low.system();
  const int r = sys.r();
  for (int j = 0; j <= r; ++j) {
    GMElement rhs = apply_dti(lat.generator(j)).scaled(Rational(j + 1)) + gen_or_zero(lat, j + 1);
    for (int i = 2; i <= r - j; ++i) rhs += lat.generator(i + j).scaled(sys.s(i).scaled(Rational(i - 1)));
    out.push_back(closed_form(apply_t(sys, lat.generator(j)), rhs, bound,
                              "t*" + vname(j) + " = " + std::to_string(j + 1) + " dt^-1*" + vname(j) + " + " +
                                  vname(j + 1) + " + sum_i (i-1) s_i v_{i+" + std::to_string(j) + "}"));
    for (int i = 1; i <= r; ++i) {
      GMElement lhs = apply_dti_dsi(lat.generator(j), i).truncate_series(lsys.degree_bound());
      GMElement rhs2 = i + j <= r ? low.generator(i + j) : lsys.zero();
      out.push_back(closed_form(lhs, rhs2, bound,
                                "dt^-1*d_s" + std::to_string(i) + "*" + vname(j) + " = " +
                                    (i + j <= r ? vname(i + j) : std::string("0"))));
    }
  }
  for (int j = 1; j <= r; ++j) {
    GMElement lhs = lat.generator(0).apply_matrix(sys.nilpotent_power(j)).shifted(j);
    out.push_back(closed_form(lhs, lat.generator(j), bound, "dt^-" + std::to_string(j) + "*N^" + std::to_string(j) + "*v0 = " + vname(j)));
  }
}

void relative_closed_forms(const Lattice& lat, const Lattice& low, int bound, std::vector<StabilityCheck>& out) {
  const GMSystem& sys = lat.system();
  const GMSystem& lsys = low.system();
  const RelativeFamilySpec& spec = *lat.relative();
  const int r = sys.r();
  const int n = sys.degree_bound();
  const GMElement& v0 = lat.generator(0);

  for (int j = 2; j <= r; ++j)
    out.push_back(closed_form(apply_dti_dsi(v0, j).truncate_series(lsys.degree_bound()), low.generator(j), bound,
                              "dt^-1*d_s" + std::to_string(j) + "*v0 = dt^-" + std::to_string(j) + "*d_s1^" +
                                  std::to_string(j) + "*v0"));

  GMElement defect = apply_t(sys, v0) - apply_dti(v0);
  out.push_back(closed_form(defect, relative_t_defect(sys, spec), bound,
                            "(t - dt^-1)*v0 = sum_nu (||nu|| - |nu|) h_i^(||nu||) s^nu/nu! dt^(|nu|-||nu||-1) e_i"));
  GMElement rhs = lsys.zero();
  for (int j = 2; j <= r; ++j)
    rhs += apply_dti_dsi(v0, j).truncate_series(lsys.degree_bound()).scaled(lsys.s(j).scaled(Rational(j - 1)));
  out.push_back(closed_form(defect.truncate_series(lsys.degree_bound()), rhs, bound,
                            "(t - dt^-1)*v0 = sum_j (j-1) s_j dt^-1*d_sj*v0"));

  // Closed-form generators against repeated differentiation of v0.
  for (int j = 1; j <= r && j <= n; ++j) {
    GMElement op = v0;
    for (int k = 0; k < j; ++k) op = apply_dsi(op, 1);
    op = op.shifted(j).truncate_series(n - j);
    out.push_back(closed_form(op, lat.generator(j).truncate_series(n - j), bound,
                              "dt^-" + std::to_string(j) + "*d_s1^" + std::to_string(j) + "*v0 (operator vs closed form)"));
  }

  // Past r the derivatives stay in the lattice.
  for (int j = r + 1; j <= r + 2; ++j) {
    StabilityCheck c = membership(lat, relative_generator(sys, spec, j), bound,
                                  "dt^-" + std::to_string(j) + "*d_s1^" + std::to_string(j) + "*v0 in lattice");
    out.push_back(std::move(c));
  }

  for (int j = 2; j <= r; ++j) {
    RelativeOriginValue val = relative_origin_value(lat, j);
    StabilityCheck c = closed_form(val.value, val.predicted, bound,
                                   "dt^-1*d_s" + std::to_string(j) + "*v0 at s=0 = sum_{i<=" + std::to_string(j) +
                                       "} h_i^(" + std::to_string(j) + ")(0) dt^-" + std::to_string(j) + " e_i");
    c.detail += std::string(c.detail.empty() ? "" : "; ") +
                (val.equals_diagonal ? "reduces to the diagonal term" : "differs from the diagonal term");
    out.push_back(std::move(c));
  }
}

}  // namespace

bool StabilityReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<const StabilityCheck*> StabilityReport::failures() const {
  std::vector<const StabilityCheck*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

RelativeOriginValue relative_origin_value(const Lattice& lat, int j) {
  if (lat.kind() != FamilyKind::Relative) throw StructuralError("relative_origin_value needs a relative family");
  const GMSystem& sys = lat.system();
  if (j < 2 || j > sys.r()) throw StructuralError("relative_origin_value: j outside 2..r");
  const RelativeFamilySpec& spec = *lat.relative();
  RelativeOriginValue out{j, sys.zero(), sys.zero(), sys.zero(), false, false};
  out.value = apply_dti_dsi(lat.generator(0), j).at_origin();
  HVector pred = sys.zero_vector();
  for (int i = 2; i <= j; ++i) {
    Series d = spec.h[static_cast<std::size_t>(i - 2)];
    for (int k = 0; k < j; ++k) d = partial_derivative(d, 1);
    pred[i] = sys.constant_series(d.constant_term());
  }
  out.predicted = sys.element(j, pred);
  HVector diag = sys.zero_vector();
  diag[j] = pred[j];
  out.diagonal_term = sys.element(j, diag);
  const int bound = sys.weight_bound() - 1;
  out.matches_prediction = equal_through(out.value, out.predicted, bound);
  out.equals_diagonal = equal_through(out.value, out.diagonal_term, bound);
  return out;
}

StabilityReport stability_check(const Lattice& lat, std::optional<int> bound_opt) {
  const GMSystem& sys = lat.system();
  if (sys.degree_bound() < 1) throw StructuralError("stability_check needs series degree >= 1");
  const int bound = bound_opt.value_or(sys.default_bound());
  if (bound < 0 || bound > sys.weight_bound()) throw StructuralError("stability bound outside [0, K]");
  const int low_degree = sys.degree_bound() - 1;
  Lattice low = lat.with_series_bound(low_degree);

  StabilityReport report;
  report.family = lat.kind();
  report.bound = bound;
  for (int j = 0; j < lat.rank(); ++j) {
    const GMElement& v = lat.generator(j);
    report.checks.push_back(membership(lat, apply_t(sys, v), bound, "t*" + vname(j)));
    report.checks.push_back(membership(lat, apply_dti(v), bound, "dt^-1*" + vname(j)));
    for (int i = 1; i <= sys.nvars(); ++i)
      report.checks.push_back(membership(low, apply_dti_dsi(v, i).truncate_series(low_degree), bound,
                                         "dt^-1*d_s" + std::to_string(i) + "*" + vname(j)));
  }
  switch (lat.kind()) {
    case FamilyKind::Special: special_closed_forms(lat, low, bound, report.checks); break;
    case FamilyKind::Nilpotent: nilpotent_closed_forms(lat, low, bound, report.checks); break;
    case FamilyKind::Relative: relative_closed_forms(lat, low, bound, report.checks); break;
    case FamilyKind::Generic: break;
  }
  return report;
}

}  // namespace brieskorn
