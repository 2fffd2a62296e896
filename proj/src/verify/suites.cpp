#include <chrono>
#include <functional>
#include <set>

#include "brieskorn/canonical.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/stability.hpp"
#include "brieskorn/verify.hpp"

namespace brieskorn::verify {

namespace {

// Independent streams per suite so adding a suite never shifts another's inputs.
std::mt19937_64 suite_rng(const RunConfig& c, std::uint64_t salt) { return std::mt19937_64(c.seed * 0x9E3779B97F4A7C15ULL + salt); }

Json reproducer_for(const RunConfig& c, const std::string& suite) {
  RunConfig copy = c;
  copy.suites = {suite};
  return config_to_json(copy);
}

void add_case(SuiteResult& s, std::string name, bool passed, std::string detail = {},
              std::optional<std::string> residual = std::nullopt, std::optional<Json> reproducer = std::nullopt) {
  CaseResult cr{std::move(name), passed, std::move(detail), std::move(residual), std::nullopt};
  if (!passed) cr.reproducer = std::move(reproducer);
  s.passed = s.passed && passed;
  s.cases.push_back(std::move(cr));
}

Lattice special_lattice(const RunConfig& c, const Series& h) {
  return special_deformation(GMSystem::constant(c.r, c.K, c.N), h);
}

void suite_stability(const RunConfig& c, SuiteResult& s) {
  Lattice lat = build_lattice(c);
  StabilityReport rep = stability_check(lat);
  Json witnesses = Json::object();
  for (const auto& chk : rep.checks) {
    std::optional<std::string> residual;
    if (chk.residual) residual = chk.residual->to_string();
    add_case(s, chk.name, chk.passed, chk.detail, residual, reproducer_for(c, "stability"));
    if (chk.witness && chk.name.rfind("t*", 0) == 0) witnesses[chk.name] = chk.witness->to_string();
  }
  s.artifacts["stability.family"] = to_string(lat.kind());
  s.artifacts["stability.bound"] = rep.bound;
  s.artifacts["stability.witnesses"] = witnesses;
}

void suite_canonical(const RunConfig& c, SuiteResult& s) {
  Lattice lat = build_lattice(c);
  Frame frame = Frame::from_matrix(c.frame);
  const Json repro = reproducer_for(c, "canonical");
  OppositeCheck opp = is_opposite(frame, lat);
  add_case(s, "frame opposite to F_0 at s=0", opp.opposite,
           opp.failing_p ? "rank drop at p = " + std::to_string(*opp.failing_p) : "", std::nullopt, repro);
  if (!opp.opposite) return;

  std::vector<CanonicalSolution> fwd = canonical_generators(lat, frame);
  std::vector<CanonicalSolution> rev = canonical_generators(lat, frame, {std::nullopt, PivotOrder::Reverse});
  const int K = lat.system().weight_bound();
  const bool identity = c.frame == RationalMatrix::identity(c.frame.rows());
  for (int j = 0; j < lat.rank(); ++j) {
    const std::string tag = "e~_" + std::to_string(j);
    ResidualCheck law = check_residual_law(fwd[static_cast<std::size_t>(j)], frame);
    add_case(s, "residual law " + tag, law.holds, law.detail,
             law.holds ? std::nullopt : std::optional(fwd[static_cast<std::size_t>(j)].w.to_string()), repro);
    const GMElement& a = fwd[static_cast<std::size_t>(j)].w;
    const GMElement& b = rev[static_cast<std::size_t>(j)].w;
    bool same = equal_through(a, b, K);
    add_case(s, "pivot-order uniqueness " + tag, same, same ? "" : "forward and reverse solves differ",
             same ? std::nullopt : std::optional((a - b).to_string()), repro);
    if (identity && lat.kind() != FamilyKind::Relative) {
      bool eq = equal_through(a, lat.generator(j), K);
      add_case(s, "identity frame returns v" + std::to_string(j), eq, "",
               eq ? std::nullopt : std::optional((a - lat.generator(j)).to_string()), repro);
    }
  }
  GenerationCheck gen = check_generation(lat, fwd, lat.system().default_bound());
  add_case(s, "canonical set generates the lattice", gen.generates,
           gen.failing_generator ? "v" + std::to_string(*gen.failing_generator) + " not reached" : "", std::nullopt, repro);
  if (identity && lat.kind() == FamilyKind::Relative) {
    bool eq = equal_through(fwd[0].w, lat.generator(0), K);
    s.artifacts["canonical.relative_primitive_is_canonical"] = eq;
  }
  s.artifacts["canonical.w"] = fwd[0].w.to_string();
  s.artifacts["canonical.witness"] = fwd[0].witness.to_string();
}

struct InvariantInstance {
  Series h;
  RationalMatrix frame;
};

void suite_theorem2(const RunConfig& c, SuiteResult& s) {
  std::vector<InvariantInstance> inst{{c.h, c.frame}};
  std::mt19937_64 rng = suite_rng(c, 2);
  for (int i = 0; i < c.samples; ++i) {
    Series h = random_inputs::deformation_function(rng, c.N);
    inst.push_back({h, random_inputs::frame_matrix(rng, c.r)});
  }
  std::vector<std::vector<CaseResult>> results(inst.size());
  std::vector<InvariantTuple> first(1);
  const auto n = static_cast<std::ptrdiff_t>(inst.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const InvariantInstance& in = inst[static_cast<std::size_t>(i)];
    RunConfig rc = c;
    rc.h = in.h;
    rc.frame = in.frame;
    rc.samples = 0;
    rc.suites = {"theorem2"};
    const Json repro = config_to_json(rc);
    const std::string tag = i == 0 ? "config" : "sample " + std::to_string(i);
    auto& out = results[static_cast<std::size_t>(i)];
    try {
      Lattice lat = special_lattice(c, in.h);
      Frame frame = Frame::from_matrix(in.frame);
      HVector e0 = HVector::constant(frame.tilde_basis(0), c.r, c.N);
      CanonicalSolution sol = canonical_element(lat, frame, e0, 0);
      InvariantTuple inv = extract_invariants(sol, frame);
      if (i == 0) first[0] = inv;
      GammaParams<Rational> p = params_from_frame(frame);
      Series ha = act_on_h(p, in.h);
      Series lhs = inv.g_tilde;
      Series rhs = compose_univariate(ha, inv.g[0]);
      bool ok = lhs == rhs;
      out.push_back({tag + ": g~ = h^A o g_1", ok, ok ? "" : "mismatch", ok ? std::nullopt : std::optional((lhs - rhs).to_string()),
                     ok ? std::nullopt : std::optional(repro)});
      bool coord = inv.is_coordinate_system();
      out.push_back({tag + ": (g_1..g_r) is a coordinate system", coord, coord ? "" : "Jacobian at 0 is singular",
                     std::nullopt, coord ? std::nullopt : std::optional(repro)});
      GMSystem sys = lat.system();
      Series hs = embed_univariate(in.h, c.r, 1, c.N);
      Series u = unit_inverse(sys.constant_series(1) + sys.s(1).scaled(p.alpha) + hs.scaled(p.beta));
      bool tail = true;
      for (int j = 3; j <= c.r; ++j) tail = tail && inv.g[static_cast<std::size_t>(j - 1)] == u * sys.s(j);
      out.push_back({tag + ": g_j = u s_j for j >= 3", tail, "", std::nullopt, tail ? std::nullopt : std::optional(repro)});
    } catch (const std::exception& e) {
      out.push_back({tag, false, std::string("error: ") + e.what(), std::nullopt, repro});
    }
  }
  for (auto& group : results)
    for (auto& cr : group) {
      s.passed = s.passed && cr.passed;
      s.cases.push_back(std::move(cr));
    }
  if (!first[0].g.empty()) {
    Json g = Json::array();
    for (const auto& f : first[0].g) g.push_back(f.to_string());
    s.artifacts["invariants.g"] = g;
    s.artifacts["invariants.g_tilde"] = first[0].g_tilde.to_string();
  }
}

void suite_theorem1(const RunConfig& c, SuiteResult& s) {
  const Json repro = reproducer_for(c, "theorem1");
  Frame frame = Frame::from_matrix(c.frame);
  Series base = full_pipeline_action(frame, c.h);
  Series direct = act_on_h(params_from_frame(frame), c.h);
  add_case(s, "pipeline output equals the (alpha, beta, gamma) action", base == direct, "",
           base == direct ? std::nullopt : std::optional((base - direct).to_string()), repro);

  std::mt19937_64 rng = suite_rng(c, 1);
  const std::string base_text = base.to_string();
  int varied = 0;
  for (int i = 0; i < c.samples; ++i) {
    RationalMatrix m = random_inputs::frame_matrix(rng, c.r);
    m(1, 0) = c.frame(1, 0);
    m(2, 0) = c.frame(2, 0);
    m(2, 1) = c.frame(2, 1);
    if (c.r < 3) break;  // no entries outside (alpha, beta, gamma)
    ++varied;
    Series out = full_pipeline_action(Frame::from_matrix(m), c.h);
    bool same = out.to_string() == base_text;
    add_case(s, "frame variation " + std::to_string(i + 1) + " leaves h^A unchanged", same, "",
             same ? std::nullopt : std::optional((out - base).to_string()), repro);
  }
  s.artifacts["theorem1.frames_varied"] = varied;
  s.artifacts["theorem1.h_A"] = base_text;

  RationalMatrix jac35 = orbit_jacobian(c.h, {3, 4, 5});
  RationalMatrix jac36 = orbit_jacobian(c.h, {3, 4, 5, 6});
  s.artifacts["theorem1.rank_levels_3_5"] = jac35.rank();
  s.artifacts["theorem1.rank_levels_3_6"] = jac36.rank();
  bool full = jac36.rank() == 3;
  add_case(s, "orbit dimension 3 (Jacobian of c^A_3..c^A_6 at the identity)", full,
           "rank " + std::to_string(jac36.rank()) + " over levels 3..6, " + std::to_string(jac35.rank()) +
               " over levels 3..5",
           full ? std::nullopt : std::optional(jac36.to_string()), repro);
}

bool integral_coefficients(const PolyElement& p) {
  for (const auto& [m, q] : p.terms())
    if (q.get_den() != 1) return false;
  return true;
}

void suite_gamma(const RunConfig& c, SuiteResult& s) {
  const Json repro = reproducer_for(c, "gamma");
  std::mt19937_64 rng = suite_rng(c, 3);
  constexpr int kTriples = 100;

  int law_fail = -1;
  std::string law_residual;
  for (int i = 0; i < kTriples && law_fail < 0; ++i) {
    GammaParams<Rational> p = random_inputs::params(rng), q = random_inputs::params(rng);
    Series h = random_inputs::deformation_function(rng, c.N);
    Series lhs = act_on_h(q, act_on_h(p, h));
    Series rhs = act_on_h(compose_params(p, q), h);
    if (lhs != rhs) {
      law_fail = i;
      law_residual = (lhs - rhs).to_string();
    }
  }
  add_case(s, "composition law over " + std::to_string(kTriples) + " random triples", law_fail < 0,
           law_fail < 0 ? "" : "triple " + std::to_string(law_fail) + " fails",
           law_fail < 0 ? std::nullopt : std::optional(law_residual), repro);

  bool assoc = true, ident = true, inv = true, matrix = true;
  const GammaParams<Rational> zero{};
  for (int i = 0; i < kTriples; ++i) {
    auto a = random_inputs::params(rng), b = random_inputs::params(rng), d = random_inputs::params(rng);
    assoc = assoc && compose_params(compose_params(a, b), d) == compose_params(a, compose_params(b, d));
    ident = ident && compose_params(a, zero) == a && compose_params(zero, a) == a;
    inv = inv && compose_params(a, inverse_params(a)) == zero && compose_params(inverse_params(a), a) == zero;
    matrix = matrix && params_matrix(compose_params(a, b)) == params_matrix(a) * params_matrix(b);
  }
  add_case(s, "associativity", assoc, "", std::nullopt, repro);
  add_case(s, "identity (0, 0, 0)", ident, "", std::nullopt, repro);
  add_case(s, "inverse (-alpha, -beta + gamma alpha, -gamma)", inv, "", std::nullopt, repro);
  add_case(s, "isomorphic to 3x3 unit lower-triangular products", matrix, "", std::nullopt, repro);

  constexpr int kMaxLevel = 6;
  std::vector<PolyElement> orbit = symbolic_orbit(kMaxLevel);
  const PolyRingPtr& ring = orbit[1].ring();
  PolyElement c2 = PolyElement::parse(ring, "c2");
  PolyElement c3 = PolyElement::parse(ring, "c3 + alpha*c2 - 2*gamma*c2^2");
  add_case(s, "c^A_2 = c2", orbit[0] == c2, orbit[0].to_string(), std::nullopt, repro);
  add_case(s, "c^A_3 = c3 + alpha*c2 - 2*gamma*c2^2", orbit[1] == c3, orbit[1].to_string(), std::nullopt, repro);
  bool integral = true;
  for (const auto& p : orbit) integral = integral && integral_coefficients(p);
  add_case(s, "orbit polynomials have integer coefficients", integral, "", std::nullopt, repro);

  int eval_fail = -1;
  for (int i = 0; i < c.samples && eval_fail < 0; ++i) {
    std::vector<Rational> point;
    GammaParams<Rational> p = random_inputs::params(rng);
    point = {p.alpha, p.beta, p.gamma};
    Series h(1, kMaxLevel);
    for (int k = 2; k <= kMaxLevel; ++k) {
      Rational ck = random_inputs::small_rational(rng);
      if (k == 2 && ck == 0) ck = 1;
      point.push_back(ck);
      h.add_term(exponents({k}), ck);
    }
    Series ha = act_on_h(p, h);
    for (int k = 2; k <= kMaxLevel; ++k)
      if (orbit[static_cast<std::size_t>(k - 2)].evaluate(point) != ha.coefficient(exponents({k}))) eval_fail = i;
  }
  add_case(s, "symbolic orbit matches numeric action at " + std::to_string(c.samples) + " points (k <= 6)", eval_fail < 0,
           eval_fail < 0 ? "" : "point " + std::to_string(eval_fail) + " disagrees", std::nullopt, repro);

  bool c2_invariant = true, equivariant = true;
  for (int i = 0; i < std::max(1, c.samples); ++i) {
    GammaParams<Rational> p = random_inputs::params(rng);
    Series ha = act_on_h(p, c.h);
    c2_invariant = c2_invariant && ha.coefficient(exponents({2})) == c.h.coefficient(exponents({2}));
    for (int k = 1; k <= c.N - 1; ++k)
      equivariant = equivariant && project_orbit(ha, k) == act_on_point(p, project_orbit(c.h, k));
  }
  add_case(s, "c2 is invariant", c2_invariant, "", std::nullopt, repro);
  add_case(s, "projections to A_k are equivariant", equivariant, "", std::nullopt, repro);
  s.artifacts["gamma.c3_A"] = orbit[1].to_string();
}

void suite_period(const RunConfig& c, SuiteResult& s) {
  const Json repro = reproducer_for(c, "period");
  Lattice lat = build_lattice(c);
  Frame frame = Frame::from_matrix(c.frame);
  std::mt19937_64 rng = suite_rng(c, 4);
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> points;
  for (int guard = 0; static_cast<int>(points.size()) < c.samples && guard < 100 * (c.samples + 1); ++guard) {
    std::vector<Rational> pt;
    for (int i = 0; i < lat.system().nvars(); ++i) pt.push_back(random_inputs::small_rational(rng));
    if (seen.insert(pt).second) points.push_back(pt);
  }
  PeriodSupport ps = period_support(lat, frame, points);
  add_case(s, "images pairwise distinct at " + std::to_string(points.size()) + " samples", ps.injective_on_samples, "",
           std::nullopt, repro);
  Json support = Json::array();
  for (const auto& [w, i] : ps.support) support.push_back({w, i});
  Json outside = Json::array();
  for (const auto& [w, i] : ps.outside_reference_span) outside.push_back({w, i});
  s.artifacts["period.support"] = support;
  s.artifacts["period.within_reference_span"] = ps.within_reference_span;
  s.artifacts["period.outside_reference_span"] = outside;
  s.artifacts["period.samples"] = points.size();
}

}  // namespace

Lattice build_lattice(const RunConfig& c) {
  Lattice lat = [&] {
    switch (c.family) {
      case Family::Nilpotent: return nilpotent_family(GMSystem::shifted(c.r, c.K, c.N));
      case Family::Relative: return relative_family(GMSystem::constant(c.r, c.K, c.N), RelativeFamilySpec{c.h_i});
      case Family::Special: break;
    }
    return special_lattice(c, c.h);
  }();
  if (c.perturb_generator) {
    const int j = *c.perturb_generator;
    const GMSystem& sys = lat.system();
    HVector bump = sys.zero_vector();
    bump[c.r] = sys.s(1) * sys.s(1);
    lat = lat.with_generator(j, lat.generator(j) + sys.element(lat.lead_weight(j), bump));
  }
  return lat;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  static const std::map<std::string, std::function<void(const RunConfig&, SuiteResult&)>> table{
      {"stability", suite_stability}, {"canonical", suite_canonical}, {"theorem2", suite_theorem2},
      {"theorem1", suite_theorem1},   {"gamma", suite_gamma},         {"period", suite_period}};
  SuiteResult s;
  s.name = name;
  auto it = table.find(name);
  auto t0 = std::chrono::steady_clock::now();
  if (it == table.end()) {
    s.passed = false;
    s.error = "unknown suite";
  } else {
    try {
      it->second(config, s);
    } catch (const std::exception& e) {
      s.passed = false;
      s.error = e.what();
      CaseResult cr{"suite aborted", false, e.what(), std::nullopt, reproducer_for(config, name)};
      s.cases.push_back(std::move(cr));
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

bool Report::passed() const {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

Report run(const RunConfig& config) {
  Report r{config_to_json(config), {}};
  for (const auto& name : config.suites) r.suites.push_back(run_suite(name, config));
  return r;
}

}  // namespace brieskorn::verify
